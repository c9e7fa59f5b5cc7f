#include "census/finitegroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace census {

namespace {

int col_of(Letter x) {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

// HLT enumeration: scan every relator at every live coset, filling gaps with
// new cosets, recording forced equalities through a union-find whose dead
// rows are transferred onto their representatives.
struct ToddCoxeter {
  int ncols;
  std::vector<std::vector<int>> rels;
  std::vector<std::vector<int>> subs;
  int cap;
  std::size_t live_limit;

  std::vector<std::vector<int>> tau;  // tau[coset][col]; coset 0 unused, 0 = undefined
  std::vector<int> parent;            // union-find, parent[i] <= i
  std::size_t live = 1;
  std::vector<int> dead_rows;

  ToddCoxeter(const Presentation& P, const std::vector<Word>& subgroup, int cap_)
      : ncols(2 * P.generator_count()), cap(cap_) {
    if (cap < 1) throw std::invalid_argument("coset cap must be positive");
    live_limit = 100 * static_cast<std::size_t>(cap) + 10000;
    for (const Word& r : P.relators) rels.emplace_back(r.begin(), r.end());
    for (const Word& w : subgroup) {
      Word r = free_reduce(w);
      for (Letter x : r)
        if (x == 0 || std::abs(x) > P.generator_count())
          throw std::invalid_argument("subgroup word uses an unknown generator");
      if (!r.empty()) subs.emplace_back(r.begin(), r.end());
    }
    tau.assign(2, std::vector<int>(ncols, 0));
    parent = {0, 1};
  }

  int rep(int k) {
    while (parent[k] != k) {
      parent[k] = parent[parent[k]];
      k = parent[k];
    }
    return k;
  }

  bool alive(int k) { return rep(k) == k; }

  int define(int a, int c) {
    if (live + 1 > live_limit) throw CapExceeded("coset enumeration exceeded its cap");
    int b = static_cast<int>(tau.size());
    tau.emplace_back(ncols, 0);
    parent.push_back(b);
    ++live;
    tau[a][c] = b;
    tau[b][c ^ 1] = a;
    return b;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    dead_rows.push_back(b);
  }

  // Transfer each dead row onto representatives, merging further whenever a
  // slot is already taken by a different coset.
  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_rows.empty()) {
      int g = dead_rows.back();
      dead_rows.pop_back();
      for (int c = 0; c < ncols; ++c) {
        int d = tau[g][c];
        if (d == 0) continue;
        tau[g][c] = 0;
        if (tau[d][c ^ 1] == g) tau[d][c ^ 1] = 0;
        int mu = rep(g), nu = rep(d);
        if (int e = tau[mu][c]; e != 0) {
          merge(nu, e);
        } else if (int e = tau[nu][c ^ 1]; e != 0) {
          merge(mu, e);
        } else {
          tau[mu][c] = nu;
          tau[nu][c ^ 1] = mu;
        }
      }
    }
  }

  void join(int a, int c, int b) {
    if (int e = tau[a][c]; e != 0) {
      if (rep(e) != rep(b)) coincidence(e, b);
      return;
    }
    if (int e = tau[b][c ^ 1]; e != 0) {
      if (rep(e) != rep(a)) coincidence(e, a);
      return;
    }
    tau[a][c] = b;
    tau[b][c ^ 1] = a;
  }

  void scan_and_fill(int a, const std::vector<int>& w) {
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = a, b = a;
    for (;;) {
      while (i <= j && tau[f][col_of(w[i])] != 0) {
        f = tau[f][col_of(w[i])];
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tau[b][col_of(-w[j])] != 0) {
        b = tau[b][col_of(-w[j])];
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        join(f, col_of(w[i]), b);
        return;
      }
      define(f, col_of(w[i]));
    }
  }

  ToddCoxeterResult run() {
    for (const auto& w : subs) scan_and_fill(1, w);
    for (int a = 1; a < static_cast<int>(tau.size()); ++a) {
      if (!alive(a)) continue;
      for (const auto& r : rels) {
        scan_and_fill(a, r);
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      for (int c = 0; c < ncols; ++c)
        if (tau[a][c] == 0) define(a, c);
    }
    return compact();
  }

  ToddCoxeterResult compact() {
    std::vector<int> newid(tau.size(), 0);
    int n = 0;
    for (int a = 1; a < static_cast<int>(tau.size()); ++a)
      if (alive(a)) newid[a] = ++n;
    if (n > cap) throw CapExceeded("subgroup index exceeds the cap");

    CosetTable t;
    t.degree = n;
    t.action.assign(ncols / 2, std::vector<int>(n, 0));
    for (int a = 1; a < static_cast<int>(tau.size()); ++a) {
      if (!alive(a)) continue;
      for (int g = 0; g < ncols / 2; ++g) {
        int d = tau[a][2 * g];
        if (d == 0) throw std::logic_error("coset table incomplete after enumeration");
        t.action[g][newid[a] - 1] = newid[rep(d)];
      }
    }
    return {n, canonicalize(t, 1)};
  }
};

}  // namespace

ToddCoxeterResult coset_enumeration(const Presentation& P, const std::vector<Word>& subgroup,
                                    int cap) {
  ToddCoxeter tc(P, subgroup, cap);
  return tc.run();
}

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order; ++a) {
    bool central = true;
    for (int b = 0; b < order && central; ++b)
      if (mul(a, b) != mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  std::vector<int> comms;
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      comms.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  return closure(*this, comms).elements;
}

FiniteGroup realize(const Presentation& P, int cap) {
  ToddCoxeterResult tc = coset_enumeration(P, {}, cap);
  const CosetTable& t = tc.table;
  int n = t.degree;
  int g = P.generator_count();

  // Inverse permutations once, so negative letters apply in O(1).
  std::vector<std::vector<int>> inv_action(g, std::vector<int>(n + 1, 0));
  for (int i = 0; i < g; ++i)
    for (int p = 1; p <= n; ++p) inv_action[i][t.action[i][p - 1]] = p;
  auto step = [&](int p, Letter x) {
    return x > 0 ? t.action[x - 1][p - 1] : inv_action[-x - 1][p];
  };

  // Element j+1's defining word is tree word of coset j+1; its column in the
  // multiplication table extends its parent's column by one letter.
  std::vector<int> parent(n + 1, 0), via(n + 1, 0);
  {
    std::vector<int> order;
    order.push_back(1);
    std::vector<char> seen(n + 1, 0);
    seen[1] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int p = order[head];
      for (int c = 0; c < 2 * g; ++c) {
        Letter x = (c % 2 == 0) ? c / 2 + 1 : -(c / 2 + 1);
        int q = step(p, x);
        if (!seen[q]) {
          seen[q] = 1;
          parent[q] = p;
          via[q] = x;
          order.push_back(q);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) throw std::logic_error("coset table not transitive");
    // Canonical tables discover points in numeric order, so columns can be
    // filled for j = 2..n relying on parent[j] < j.
    for (int j = 2; j <= n; ++j)
      if (parent[j] >= j) throw std::logic_error("coset table is not in canonical order");
  }

  FiniteGroup G;
  G.order = n;
  G.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) G.table[static_cast<std::size_t>(i - 1) * n] = i - 1;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      int prev = G.table[static_cast<std::size_t>(i - 1) * n + (parent[j] - 1)] + 1;
      G.table[static_cast<std::size_t>(i - 1) * n + (j - 1)] = step(prev, via[j]) - 1;
    }

  G.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == 0) {
        G.inverse[a] = b;
        break;
      }
  for (int i = 1; i <= g; ++i) G.generators.push_back(t.action[i - 1][0] - 1);
  return G;
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (elements.size() != o.elements.size()) return elements.size() < o.elements.size();
  return elements < o.elements;
}

Subgroup closure(const FiniteGroup& G, const std::vector<int>& seed) {
  std::vector<char> in(G.order, 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> gens = seed;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s : gens) {
      int x = G.mul(members[head], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{members};
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g) {
  std::vector<int> elems;
  elems.reserve(H.elements.size());
  for (int h : H.elements) elems.push_back(G.mul(G.mul(g, h), G.inv(g)));
  std::sort(elems.begin(), elems.end());
  return Subgroup{elems};
}

bool is_normal_subgroup(const FiniteGroup& G, const Subgroup& H) {
  for (int g = 0; g < G.order; ++g)
    if (conjugate_subgroup(G, H, g).elements != H.elements) return false;
  return true;
}

SubgroupLattice all_subgroups(const FiniteGroup& G, std::size_t count_cap) {
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclics;
  for (int a = 0; a < G.order; ++a) {
    Subgroup c = closure(G, {a});
    if (found.insert(c).second) cyclics.push_back(c);
  }

  std::vector<Subgroup> work(found.begin(), found.end());
  while (!work.empty()) {
    Subgroup h = std::move(work.back());
    work.pop_back();
    std::vector<char> in(G.order, 0);
    for (int e : h.elements) in[e] = 1;
    for (const Subgroup& c : cyclics) {
      bool inside = true;
      for (int e : c.elements)
        if (!in[e]) {
          inside = false;
          break;
        }
      if (inside) continue;
      std::vector<int> seed = h.elements;
      seed.insert(seed.end(), c.elements.begin(), c.elements.end());
      Subgroup j = closure(G, seed);
      if (found.insert(j).second) {
        if (found.size() > count_cap) throw CapExceeded("subgroup count exceeds the cap");
        work.push_back(std::move(j));
      }
    }
  }

  SubgroupLattice lat;
  lat.subgroups.assign(found.begin(), found.end());
  std::map<std::vector<int>, std::size_t> index_of;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    index_of[lat.subgroups[i].elements] = i;

  std::vector<char> classified(lat.subgroups.size(), 0);
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (classified[i]) continue;
    std::set<std::size_t> members;
    for (int g = 0; g < G.order; ++g) {
      Subgroup c = conjugate_subgroup(G, lat.subgroups[i], g);
      auto it = index_of.find(c.elements);
      if (it == index_of.end()) throw std::logic_error("conjugate subgroup missing from lattice");
      members.insert(it->second);
    }
    for (std::size_t m : members) classified[m] = 1;
    lat.classes.emplace_back(members.begin(), members.end());
  }
  return lat;
}

FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
  int h = H.order();
  std::vector<int> local(G.order, -1);
  for (int i = 0; i < h; ++i) local[H.elements[i]] = i;
  if (H.elements.empty() || H.elements[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");

  FiniteGroup S;
  S.order = h;
  S.table.assign(static_cast<std::size_t>(h) * h, 0);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      int prod = G.mul(H.elements[i], H.elements[j]);
      if (local[prod] < 0) throw std::invalid_argument("element set is not closed");
      S.table[static_cast<std::size_t>(i) * h + j] = local[prod];
    }
  S.inverse.assign(h, 0);
  for (int i = 0; i < h; ++i) S.inverse[i] = local[G.inv(H.elements[i])];
  return S;
}

namespace {

// Quotient by a normal subgroup: cosets keyed by their least element.
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  std::vector<int> coset_min(G.order, -1);
  for (int a = 0; a < G.order; ++a) {
    if (coset_min[a] >= 0) continue;
    int least = a;
    std::vector<int> coset;
    for (int n : N.elements) coset.push_back(G.mul(a, n));
    for (int x : coset) least = std::min(least, x);
    for (int x : coset) coset_min[x] = least;
  }
  std::vector<int> reps;
  for (int a = 0; a < G.order; ++a)
    if (coset_min[a] == a) reps.push_back(a);
  std::vector<int> id_of(G.order, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) id_of[reps[i]] = static_cast<int>(i);

  int q = static_cast<int>(reps.size());
  FiniteGroup Q;
  Q.order = q;
  Q.table.assign(static_cast<std::size_t>(q) * q, 0);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      Q.table[static_cast<std::size_t>(i) * q + j] = id_of[coset_min[G.mul(reps[i], reps[j])]];
  Q.inverse.assign(q, 0);
  for (int i = 0; i < q; ++i) Q.inverse[i] = id_of[coset_min[G.inv(reps[i])]];
  return Q;
}

// Invariant factors of an abelian group, largest first, by peeling off a
// maximal-order cyclic direct factor.
std::vector<long long> abelian_invariants(FiniteGroup A) {
  std::vector<long long> factors;
  while (A.order > 1) {
    int best = 1, best_ord = 1;
    for (int a = 0; a < A.order; ++a) {
      int o = A.element_order(a);
      if (o > best_ord) {
        best_ord = o;
        best = a;
      }
    }
    factors.push_back(best_ord);
    A = quotient_group(A, closure(A, {best}));
  }
  return factors;
}

}  // namespace

bool GroupFingerprint::operator<(const GroupFingerprint& o) const {
  return std::tie(order, abelian, order_histogram, center_order, derived_order,
                  abelian_invariants) < std::tie(o.order, o.abelian, o.order_histogram,
                                                 o.center_order, o.derived_order,
                                                 o.abelian_invariants);
}

std::string GroupFingerprint::str() const {
  std::ostringstream out;
  out << "order=" << order << (abelian ? " abelian" : " nonabelian") << " orders=";
  for (std::size_t i = 0; i < order_histogram.size(); ++i) {
    if (i) out << ',';
    out << order_histogram[i].first << ':' << order_histogram[i].second;
  }
  out << " center=" << center_order << " derived=" << derived_order << " h1=";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i) {
    if (i) out << 'x';
    out << "Z/" << abelian_invariants[i];
  }
  if (abelian_invariants.empty()) out << "0";
  return out.str();
}

GroupFingerprint fingerprint(const FiniteGroup& G) {
  GroupFingerprint fp;
  fp.order = G.order;
  fp.abelian = G.is_abelian();
  std::map<int, int> hist;
  for (int a = 0; a < G.order; ++a) ++hist[G.element_order(a)];
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.center_order = static_cast<int>(G.center().size());
  Subgroup derived{G.derived_subgroup()};
  fp.derived_order = derived.order();
  fp.abelian_invariants = abelian_invariants(quotient_group(G, derived));
  return fp;
}

namespace {

// Greedy generating sequence, each step adding the element whose cyclic
// extension grows the closure most.
std::vector<int> generating_sequence(const FiniteGroup& G) {
  std::vector<int> gens;
  Subgroup span = closure(G, {});
  while (span.order() < G.order) {
    int best = -1, best_size = span.order();
    for (int a = 0; a < G.order; ++a) {
      if (std::binary_search(span.elements.begin(), span.elements.end(), a)) continue;
      std::vector<int> seed = span.elements;
      seed.push_back(a);
      int size = closure(G, seed).order();
      if (size > best_size) {
        best_size = size;
        best = a;
      }
    }
    gens.push_back(best);
    std::vector<int> seed = span.elements;
    seed.push_back(best);
    span = closure(G, seed);
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& A;
  const FiniteGroup& B;
  std::vector<int> gens;          // generating sequence of A
  std::vector<int> phi;           // A element -> B element or -1
  std::vector<char> used;         // B elements already hit
  std::vector<int> span;          // elements of A mapped so far (a subgroup)

  bool extend(std::size_t level) {
    if (level == gens.size()) return span.size() == static_cast<std::size_t>(A.order);

    int g = gens[level];
    int want = A.element_order(g);
    for (int b = 0; b < B.order; ++b) {
      if (used[b] || B.element_order(b) != want) continue;

      std::vector<std::pair<int, int>> trail;  // assignments to roll back
      auto assign = [&](int a, int img) {
        phi[a] = img;
        used[img] = 1;
        trail.emplace_back(a, img);
      };
      bool ok = true;
      if (phi[g] == -1) assign(g, b);
      if (phi[g] != b) ok = false;
      std::vector<int> members = span;
      if (ok && !std::binary_search(members.begin(), members.end(), g)) members.push_back(g);
      // Close span + g under right multiplication by all chosen generators,
      // mapping as we go; any clash kills this image choice.
      for (std::size_t head = 0; ok && head < members.size(); ++head) {
        for (std::size_t gi = 0; gi <= level && ok; ++gi) {
          int s = gens[gi];
          int x = A.mul(members[head], s);
          int y = B.mul(phi[members[head]], phi[s]);
          if (phi[x] == -1) {
            if (used[y]) {
              ok = false;
            } else {
              assign(x, y);
              members.push_back(x);
            }
          } else if (phi[x] != y) {
            ok = false;
          }
        }
      }
      if (ok) {
        // Full consistency pass over the new span.
        for (std::size_t i = 0; i < members.size() && ok; ++i)
          for (std::size_t gi = 0; gi <= level && ok; ++gi) {
            int s = gens[gi];
            if (phi[A.mul(members[i], s)] != B.mul(phi[members[i]], phi[s])) ok = false;
          }
      }
      if (ok) {
        std::vector<int> saved_span = span;
        std::sort(members.begin(), members.end());
        span = members;
        if (extend(level + 1)) return true;
        span = std::move(saved_span);
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        phi[it->first] = -1;
        used[it->second] = 0;
      }
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order != B.order) return false;
  if (!(fingerprint(A) == fingerprint(B))) return false;
  if (A.order == 1) return true;

  IsoSearch s{A, B, generating_sequence(A), std::vector<int>(A.order, -1),
              std::vector<char>(B.order, 0), {0}};
  s.phi[0] = 0;
  s.used[0] = 1;
  return s.extend(0);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  FiniteGroup G;
  G.order = n;
  G.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  G.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) G.inverse[a] = (n - a) % n;
  if (n > 1) G.generators.push_back(1);
  return G;
}

FiniteGroup coprime_product(const FiniteGroup& G, long long q) {
  if (q < 1) throw std::invalid_argument("cyclic factor order must be positive");
  if (std::gcd(static_cast<long long>(G.order), q) != 1)
    throw std::invalid_argument("cyclic factor order must be coprime to the group order");
  if (q == 1) return G;

  int n = G.order;
  int m = static_cast<int>(q);
  FiniteGroup P;
  P.order = n * m;
  P.table.assign(static_cast<std::size_t>(P.order) * P.order, 0);
  auto id = [&](int a, int i) { return a * m + i; };
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      for (int b = 0; b < n; ++b)
        for (int j = 0; j < m; ++j)
          P.table[static_cast<std::size_t>(id(a, i)) * P.order + id(b, j)] =
              id(G.mul(a, b), (i + j) % m);
  P.inverse.assign(P.order, 0);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) P.inverse[id(a, i)] = id(G.inv(a), (m - i) % m);
  for (int g : G.generators) P.generators.push_back(id(g, 0));
  P.generators.push_back(id(0, 1));
  return P;
}

FiniteGroup spherical_group(const SphericalKind& kind, int cap) {
  FiniteGroup G = realize(spherical_presentation(kind), cap);
  if (G.order != kind.order())
    throw std::logic_error("catalog group realized with the wrong order");
  return G;
}

LensSpace::LensSpace(long long p_, long long q_) : p(p_) {
  if (p < 1) throw std::invalid_argument("lens space needs p >= 1");
  q = ((q_ % p) + p) % p;
  if (p > 1 && std::gcd(p, q) != 1)
    throw std::invalid_argument("lens space needs gcd(p, q) = 1");
}

std::string LensSpace::str() const {
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

namespace {

long long mod_inverse(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    long long quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  return ((t % p) + p) % p;
}

}  // namespace

bool lens_homeomorphic(const LensSpace& a, const LensSpace& b) {
  if (a.p != b.p) throw std::invalid_argument("lens spaces with different p are incomparable");
  long long p = a.p;
  if (p == 1) return true;
  long long q = a.q, r = b.q;
  long long qinv = mod_inverse(q, p);
  return r == q || r == (p - q) % p || r == qinv || r == (p - qinv) % p;
}

bool unique_lens_order(long long p) {
  if (p < 1) throw std::invalid_argument("lens space order must be positive");
  for (long long q = 2; q < p - 1; ++q)
    if (std::gcd(p, q) == 1) return false;
  return true;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Exceptional: return "exceptional";
    case Verdict::NotExceptional: return "not_exceptional";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

// Split G as K x Z/q with q > 1 maximal, coprime to |K|, generated by a
// central element; the complement is the set of elements whose order divides
// |G|/q, which must come out as a subgroup of the right size.
std::optional<std::pair<Subgroup, long long>> central_coprime_split(const FiniteGroup& G) {
  std::vector<int> center = G.center();
  for (long long q = G.order - 1; q > 1; --q) {
    if (G.order % q != 0) continue;
    long long m = G.order / q;
    if (std::gcd(q, m) != 1) continue;
    bool have_central = false;
    for (int z : center)
      if (G.element_order(z) == q) {
        have_central = true;
        break;
      }
    if (!have_central) continue;

    std::vector<int> k_elems;
    for (int a = 0; a < G.order; ++a)
      if (G.power(a, m) == 0) k_elems.push_back(a);
    if (static_cast<long long>(k_elems.size()) != m) continue;
    std::vector<char> in(G.order, 0);
    for (int a : k_elems) in[a] = 1;
    bool closed = true;
    for (std::size_t i = 0; i < k_elems.size() && closed; ++i)
      for (std::size_t j = 0; j < k_elems.size() && closed; ++j)
        if (!in[G.mul(k_elems[i], k_elems[j])]) closed = false;
    if (!closed) continue;
    return std::make_pair(Subgroup{k_elems}, q);
  }
  return std::nullopt;
}

}  // namespace

ExceptionalityReport exceptionality_report(const FiniteGroup& G, std::size_t count_cap) {
  SubgroupLattice lat = all_subgroups(G, count_cap);

  std::vector<std::size_t> class_of(lat.subgroups.size(), 0);
  for (std::size_t c = 0; c < lat.classes.size(); ++c)
    for (std::size_t i : lat.classes[c]) class_of[i] = c;

  std::map<int, std::vector<std::size_t>> by_index;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    int index = G.order / lat.subgroups[i].order();
    if (index > 1) by_index[index].push_back(i);
  }

  struct IsoClass {
    GroupFingerprint fp;
    FiniteGroup model;
    std::vector<std::size_t> members;
  };

  ExceptionalityReport report;
  std::optional<SubgroupWitness> witness;
  bool all_cyclic_certified = true;

  for (const auto& [index, subs] : by_index) {
    std::vector<IsoClass> classes;
    for (std::size_t i : subs) {
      FiniteGroup H = subgroup_as_group(G, lat.subgroups[i]);
      GroupFingerprint fp = fingerprint(H);
      bool placed = false;
      for (IsoClass& cls : classes) {
        if (cls.fp == fp && are_isomorphic(cls.model, H)) {
          cls.members.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({std::move(fp), std::move(H), {i}});
    }

    IndexEntry entry;
    entry.index = index;
    for (const IsoClass& cls : classes) {
      IsoClassEntry e;
      e.fingerprint = cls.fp.str();
      e.count = static_cast<int>(cls.members.size());
      e.subgroup_order = G.order / index;
      e.cyclic = false;
      for (const auto& oc : cls.fp.order_histogram)
        if (static_cast<long long>(oc.first) == e.subgroup_order) e.cyclic = true;
      std::set<std::size_t> conj_classes;
      for (std::size_t m : cls.members) conj_classes.insert(class_of[m]);
      e.all_conjugate = conj_classes.size() == 1;
      entry.iso_classes.push_back(std::move(e));

      const IsoClassEntry& back = entry.iso_classes.back();
      if (back.cyclic && back.count > 1 && !back.all_conjugate &&
          !unique_lens_order(back.subgroup_order))
        all_cyclic_certified = false;
    }
    report.by_index.push_back(std::move(entry));

    if (!witness && classes.size() >= 2) {
      SubgroupWitness w;
      w.index = index;
      w.elements_a = lat.subgroups[classes[0].members.front()].elements;
      w.elements_b = lat.subgroups[classes[1].members.front()].elements;
      w.fingerprint_a = classes[0].fp.str();
      w.fingerprint_b = classes[1].fp.str();
      witness = std::move(w);
    }
  }

  if (witness) {
    report.verdict = Verdict::NotExceptional;
    report.witness = std::move(witness);
    report.reason = "two non-isomorphic subgroups share index " +
                    std::to_string(report.witness->index);
    return report;
  }

  if (all_cyclic_certified) {
    report.verdict = Verdict::Exceptional;
    report.reason =
        "all same-index subgroups are isomorphic and every class of cyclic "
        "subgroups is either unique at its index, a single conjugacy class, "
        "or of an order all of whose lens spaces are homeomorphic";
    return report;
  }

  if (auto split = central_coprime_split(G)) {
    FiniteGroup K = subgroup_as_group(G, split->first);
    ExceptionalityReport sub = exceptionality_report(K, count_cap);
    report.verdict = sub.verdict;
    report.reason = "after splitting off a central Z/" + std::to_string(split->second) +
                    " factor: " + sub.reason;
    if (sub.witness) {
      SubgroupWitness w;
      w.index = sub.witness->index;
      for (int e : sub.witness->elements_a) w.elements_a.push_back(split->first.elements[e]);
      for (int e : sub.witness->elements_b) w.elements_b.push_back(split->first.elements[e]);
      w.fingerprint_a = sub.witness->fingerprint_a;
      w.fingerprint_b = sub.witness->fingerprint_b;
      report.witness = std::move(w);
    }
    return report;
  }

  report.verdict = Verdict::Undetermined;
  report.reason =
      "cyclic subgroups of equal order lie in distinct conjugacy classes; "
      "a lens space comparison would be needed to decide";
  return report;
}

}  // namespace census
