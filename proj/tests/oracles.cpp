#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<unsigned long long> free_group_counts(int rank, int nmax) {
  // s_n = n (n!)^{r-1} - sum_{i=1}^{n-1} ((n-i)!)^{r-1} s_i
  auto fact = [](int m) {
    unsigned long long f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  auto pw = [](unsigned long long b, int e) {
    unsigned long long r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  std::vector<unsigned long long> s(static_cast<std::size_t>(nmax) + 1, 0);
  for (int n = 1; n <= nmax; ++n) {
    unsigned long long v = static_cast<unsigned long long>(n) * pw(fact(n), rank - 1);
    for (int i = 1; i < n; ++i) v -= pw(fact(n - i), rank - 1) * s[i];
    s[n] = v;
  }
  return std::vector<unsigned long long>(s.begin() + 1, s.end());
}

namespace {

// Relabel breadth-first from point 1, visiting each point's neighbors in
// column order x1, x1^-1, x2, x2^-1, ...
census::CosetTable bfs_relabel(const std::vector<std::vector<int>>& action,
                               const std::vector<std::vector<int>>& inverse, int n) {
  int g = static_cast<int>(action.size());
  std::vector<int> to_new(n + 1, 0), to_old;
  to_old.reserve(n + 1);
  to_old.push_back(0);
  to_new[1] = 1;
  to_old.push_back(1);
  for (int i = 1; i <= n; ++i) {
    int p = to_old[i];
    for (int j = 0; j < g; ++j)
      for (int q : {action[j][p - 1], inverse[j][p - 1]})
        if (to_new[q] == 0) {
          to_new[q] = static_cast<int>(to_old.size());
          to_old.push_back(q);
        }
  }
  census::CosetTable t;
  t.degree = n;
  t.action.assign(g, std::vector<int>(n));
  for (int j = 0; j < g; ++j)
    for (int p = 1; p <= n; ++p) t.action[j][p - 1] = to_new[action[j][to_old[p] - 1]];
  return t;
}

}  // namespace

std::vector<census::CosetTable> brute_tables(const census::Presentation& P, int n) {
  int g = P.generator_count();
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  double tuples = 1;
  for (int j = 0; j < g; ++j) tuples *= static_cast<double>(perms.size());
  if (tuples > 2e7) throw std::invalid_argument("brute_tables: search space too large");

  std::vector<std::vector<int>> inverses(perms.size(), std::vector<int>(n));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (int p = 1; p <= n; ++p) inverses[i][perms[i][p - 1] - 1] = p;

  std::set<std::vector<int>> seen;
  std::vector<census::CosetTable> out;
  std::vector<std::size_t> pick(g, 0);
  for (;;) {
    std::vector<std::vector<int>> action(g), inverse(g);
    for (int j = 0; j < g; ++j) {
      action[j] = perms[pick[j]];
      inverse[j] = inverses[pick[j]];
    }

    bool ok = true;
    for (const census::Word& rel : P.relators) {
      for (int p = 1; p <= n && ok; ++p) {
        int q = p;
        for (census::Letter x : rel)
          q = x > 0 ? action[x - 1][q - 1] : inverse[-x - 1][q - 1];
        ok = q == p;
      }
      if (!ok) break;
    }

    if (ok) {
      std::vector<bool> reached(n + 1, false);
      std::vector<int> stack{1};
      reached[1] = true;
      int count = 1;
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int j = 0; j < g; ++j)
          for (int q : {action[j][p - 1], inverse[j][p - 1]})
            if (!reached[q]) {
              reached[q] = true;
              ++count;
              stack.push_back(q);
            }
      }
      if (count == n) {
        census::CosetTable t = bfs_relabel(action, inverse, n);
        std::vector<int> key;
        for (const std::vector<int>& row : t.action) key.insert(key.end(), row.begin(), row.end());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(t));
      }
    }

    int j = 0;
    while (j < g && ++pick[j] == perms.size()) pick[j++] = 0;
    if (j == g) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_isomorphic(const census::FiniteGroup& A, const census::FiniteGroup& B) {
  if (A.order != B.order) return false;
  if (A.order > 10) throw std::invalid_argument("brute_isomorphic: order too large");
  int n = A.order;
  std::vector<int> f(n);
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    f[0] = 0;
    for (int i = 1; i < n; ++i) f[i] = rest[i - 1];
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n && hom; ++b)
        hom = f[A.mul(a, b)] == B.mul(f[a], f[b]);
    if (hom) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

unsigned long long brute_surjections(const census::AbelianGroup& A, long long n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  // choices per generator: n for each free one, gcd(t, n) for each torsion one
  std::vector<long long> strides;  // image = k * stride
  std::vector<long long> limits;
  double total = 1;
  for (int i = 0; i < A.rank; ++i) {
    strides.push_back(1);
    limits.push_back(n);
    total *= static_cast<double>(n);
  }
  for (const census::Int& t : A.torsion) {
    long long tv = t.convert_to<long long>();
    long long g = std::gcd(tv % n, n);
    if (g == 0) g = n;
    strides.push_back(n / g);
    limits.push_back(g);
    total *= static_cast<double>(g);
  }
  if (total > 5e7) throw std::invalid_argument("brute_surjections: too many homomorphisms");

  std::size_t m = limits.size();
  std::vector<long long> pick(m, 0);
  unsigned long long count = 0;
  for (;;) {
    long long g = n;
    for (std::size_t i = 0; i < m; ++i) g = std::gcd(g, pick[i] * strides[i]);
    if (g == 1 || n == 1) ++count;
    std::size_t j = 0;
    while (j < m && ++pick[j] == limits[j]) pick[j++] = 0;
    if (j == m) break;
    if (m == 0) break;
  }
  return m == 0 ? (n == 1 ? 1 : 0) : count;
}

census::Int trace_recursion(long long t, long long d) {
  if (d < 0) throw std::invalid_argument("power must be nonnegative");
  census::Int prev = 2, cur = t;
  if (d == 0) return prev;
  for (long long j = 1; j < d; ++j) {
    census::Int next = census::Int(t) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

int cycle_count_mod(int k, long long v) {
  if (k < 1) throw std::invalid_argument("modulus must be positive");
  long long step = ((v % k) + k) % k;
  std::vector<bool> visited(k, false);
  int cycles = 0;
  for (int start = 0; start < k; ++start) {
    if (visited[start]) continue;
    ++cycles;
    long long x = start;
    while (!visited[x]) {
      visited[x] = true;
      x = (x + step) % k;
    }
  }
  return cycles;
}

unsigned long long brute_partitions(std::vector<int> parts, int n) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  auto rec = [&](auto&& self, std::size_t i, int rem) -> unsigned long long {
    if (rem == 0) return 1;
    if (i == parts.size()) return 0;
    unsigned long long total = 0;
    for (int used = 0; used * parts[i] <= rem; ++used)
      total += self(self, i + 1, rem - used * parts[i]);
    return total;
  };
  return rec(rec, 0, n);
}

}  // namespace oracle
