#include "census/fuchsian.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace census {

Signature::Signature(int g, int k, std::vector<int> ms)
    : genus(g), cusps(k), periods(std::move(ms)) {
  if (genus < 0 || cusps < 0) throw std::invalid_argument("signature needs genus, cusps >= 0");
  for (int m : periods)
    if (m < 2) throw std::invalid_argument("signature periods must be at least 2");
  std::sort(periods.begin(), periods.end());
}

Signature Signature::parse(const std::string& text) {
  std::string head = text, tail;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    head = text.substr(0, semi);
    tail = text.substr(semi + 1);
  }
  auto split_ints = [](const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
      std::size_t pos = item.find_first_not_of(" \t");
      if (pos == std::string::npos) throw std::invalid_argument("empty entry in signature");
      out.push_back(std::stoi(item.substr(pos)));
    }
    return out;
  };
  std::vector<int> gk = split_ints(head);
  if (gk.size() != 2) throw std::invalid_argument("signature must start with genus,cusps");
  return Signature(gk[0], gk[1], split_ints(tail));
}

std::string Signature::str() const {
  std::ostringstream out;
  out << genus << ',' << cusps;
  for (std::size_t i = 0; i < periods.size(); ++i) out << (i == 0 ? ';' : ',') << periods[i];
  return out.str();
}

Rational orbifold_euler(const Signature& sig) {
  Rational chi = 2 - 2 * sig.genus - sig.cusps;
  for (int m : sig.periods) chi -= Rational(m - 1, m);
  return chi;
}

bool fuchsian_isomorphic(const Signature& a, const Signature& b) {
  if (a.periods != b.periods) return false;  // both sorted
  if (a.cusps == 0 && b.cusps == 0) return a.genus == b.genus;
  if (a.cusps > 0 && b.cusps > 0) return 2 * a.genus + a.cusps == 2 * b.genus + b.cusps;
  return false;
}

namespace {

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lengths;
  for (int p = 1; p <= n; ++p) {
    if (seen[p]) continue;
    int len = 0, q = p;
    while (!seen[q]) {
      seen[q] = 1;
      ++len;
      q = perm[q - 1];
    }
    lengths.push_back(len);
  }
  return lengths;
}

void check_shape(const Signature& root, const CosetTable& t) {
  int gens = static_cast<int>(root.periods.size()) + root.cusps + 2 * root.genus;
  if (static_cast<int>(t.action.size()) != gens)
    throw std::logic_error("coset table generator count does not match signature");
}

}  // namespace

Signature subgroup_signature(const Signature& root, const CosetTable& t) {
  check_shape(root, t);
  int s = static_cast<int>(root.periods.size());
  int n = t.degree;

  std::vector<int> periods;
  Rational torsion_defect = 0;  // sum of (1 - 1/m') over the new periods
  for (int i = 0; i < s; ++i) {
    int m = root.periods[i];
    for (int c : cycle_lengths(t.action[i])) {
      if (m % c != 0) throw std::logic_error("torsion generator cycle does not divide its period");
      int mp = m / c;
      if (mp > 1) {
        periods.push_back(mp);
        torsion_defect += Rational(mp - 1, mp);
      }
    }
  }

  int cusps = 0;
  for (int i = s; i < s + root.cusps; ++i)
    cusps += static_cast<int>(cycle_lengths(t.action[i]).size());

  // chi' = n * chi and chi' = 2 - 2g' - k' - torsion_defect pin the genus.
  Rational chi_prime = n * orbifold_euler(root);
  Rational two_g = 2 - chi_prime - cusps - torsion_defect;
  if (denominator(two_g) != 1) throw std::logic_error("subgroup genus is not integral");
  Int num = numerator(two_g);
  if (num < 0 || num % 2 != 0) throw std::logic_error("subgroup genus is negative or odd");
  return Signature(static_cast<int>(num / 2), cusps, std::move(periods));
}

long long torsion_class_count(const Signature& root, const CosetTable& t, int m) {
  if (m < 2) throw std::invalid_argument("element order must be at least 2");
  check_shape(root, t);
  long long count = 0;
  for (std::size_t i = 0; i < root.periods.size(); ++i) {
    int mi = root.periods[i];
    if (mi % m != 0) continue;
    int want = mi / m;
    for (int c : cycle_lengths(t.action[i]))
      if (c == want) ++count;
  }
  return count;
}

std::uint64_t e_n_fuchsian(const Signature& root, int n, const EnumerationOptions& opt) {
  Presentation P = fuchsian_presentation(root);
  std::vector<CosetTable> tables = enumerate_subgroups(P, n, opt);
  // Key for the isomorphism criterion: periods plus genus (cocompact) or
  // 2g + k (cusped).
  std::set<std::tuple<std::vector<int>, int, int>> classes;
  for (const CosetTable& t : tables) {
    Signature sig = subgroup_signature(root, t);
    int cusped = sig.cusps > 0 ? 1 : 0;
    classes.emplace(sig.periods, cusped, cusped ? 2 * sig.genus + sig.cusps : sig.genus);
  }
  return classes.size();
}

std::uint64_t lattice_point_count(const Signature& root, int n) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  Rational chi = orbifold_euler(root);
  if (chi >= 0) throw std::invalid_argument("signature must be hyperbolic");

  std::set<int> divisor_set;
  for (int m : root.periods)
    for (int d = 2; d <= m; ++d)
      if (m % d == 0) divisor_set.insert(d);
  std::vector<int> divisors(divisor_set.begin(), divisor_set.end());

  // Count tuples (r, (k_m)) with r + sum (1 - 1/m) k_m = -n * chi, where r
  // is the value of 2g' - 2 + k' a cover can take: any r >= -1 when the root
  // has a cusp (covers keep the cusp, k' adjusts parity), even r >= -2 when
  // cocompact (k' = 0 forces r = 2g' - 2).
  const bool cusped = root.cusps > 0;
  const int shift = cusped ? 1 : 2;
  std::uint64_t count = 0;
  Rational room = -Rational(n) * chi + shift;  // remaining budget for r + shift >= 0
  auto rec = [&](auto&& self, std::size_t i, const Rational& remaining) -> void {
    if (i == divisors.size()) {
      if (denominator(remaining) != 1) return;
      if (cusped || numerator(remaining) % 2 == 0) ++count;  // remaining = r + 2 matches r's parity
      return;
    }
    Rational step(divisors[i] - 1, divisors[i]);
    for (Rational used = 0; used <= remaining; used += step) self(self, i + 1, remaining - used);
  };
  rec(rec, 0, room);
  return count;
}

Int partition_count(const std::vector<int>& parts, int n) {
  if (n < 0) throw std::invalid_argument("partition target must be nonnegative");
  std::vector<int> uniq;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
    uniq.push_back(p);
  }
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<Int> dp(n + 1, 0);
  dp[0] = 1;
  for (int p : uniq)
    for (int v = p; v <= n; ++v) dp[v] += dp[v - p];
  return dp[n];
}

}  // namespace census
