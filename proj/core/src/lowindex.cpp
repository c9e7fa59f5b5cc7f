#include "census/lowindex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace census {

namespace {

// Column layout: generator g occupies columns 2(g-1) (action of g) and
// 2(g-1)+1 (action of g^-1); a column's inverse column is col ^ 1.
int col_of(Letter x) {
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

Letter letter_of(int col) {
  return (col % 2 == 0) ? col / 2 + 1 : -(col / 2 + 1);
}

// DFS over partial tables. Cells hold 0 (undefined) or a 1-based point.
// New points are only ever introduced at the first undefined cell in
// row-major scan order, which keeps every emitted table canonical.
struct Searcher {
  int n;
  int ncols;
  std::vector<std::vector<int>> rels;  // relators as letter sequences
  std::uint64_t budget;
  std::uint64_t cells = 0;

  std::vector<int> tab;  // n rows * ncols, row-major
  int max_used = 1;
  std::vector<CosetTable> out;

  Searcher(const Presentation& P, int n_, const EnumerationOptions& opt)
      : n(n_), ncols(2 * P.generator_count()), budget(opt.max_cells) {
    for (const Word& r : P.relators) rels.emplace_back(r.begin(), r.end());
    tab.assign(static_cast<std::size_t>(n) * ncols, 0);
  }

  int& cell(int p, int c) { return tab[static_cast<std::size_t>(p - 1) * ncols + c]; }

  void touch() {
    if (++cells > budget) throw BudgetExceeded();
  }

  enum ScanOutcome { kClean, kDeduced, kContradiction };

  // Walk relator r from point q forward and backward; a gap of exactly one
  // cell forces a deduction, a closed walk that misses q is a contradiction.
  ScanOutcome scan(int q, const std::vector<int>& r) {
    int L = static_cast<int>(r.size());
    int f = q, fi = 0;
    while (fi < L) {
      touch();
      int v = cell(f, col_of(r[fi]));
      if (v == 0) break;
      f = v;
      ++fi;
    }
    if (fi == L) return f == q ? kClean : kContradiction;

    int b = q, bi = L;
    while (bi > fi + 1) {
      touch();
      int v = cell(b, col_of(-r[bi - 1]));
      if (v == 0) break;
      b = v;
      --bi;
    }
    if (bi > fi + 1) return kClean;  // gap of two or more cells: no information

    int c = col_of(r[fi]);
    touch();
    if (cell(b, c ^ 1) != 0) return kContradiction;  // b already has a preimage
    cell(f, c) = b;
    cell(b, c ^ 1) = f;
    return kDeduced;
  }

  // Rescan everything until no new cells appear. A complete table that
  // survives this has every relator closing at every point.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int q = 1; q <= max_used; ++q) {
        for (const auto& r : rels) {
          switch (scan(q, r)) {
            case kContradiction: return false;
            case kDeduced: changed = true; break;
            case kClean: break;
          }
        }
      }
    }
    return true;
  }

  void emit() {
    CosetTable t;
    t.degree = max_used;
    t.action.assign(ncols / 2, std::vector<int>(max_used));
    for (int g = 0; g < ncols / 2; ++g)
      for (int p = 1; p <= max_used; ++p) t.action[g][p - 1] = cell(p, 2 * g);
    out.push_back(std::move(t));
  }

  void search() {
    if (!propagate()) return;

    int q = 0, c = 0;
    bool complete = true;
    for (int p = 1; p <= max_used && complete; ++p) {
      for (int cc = 0; cc < ncols; ++cc) {
        touch();
        if (cell(p, cc) == 0) {
          q = p;
          c = cc;
          complete = false;
          break;
        }
      }
    }
    if (complete) {
      if (max_used == n) emit();
      return;
    }

    std::vector<int> saved = tab;
    int saved_used = max_used;
    for (int v = 1; v <= saved_used; ++v) {
      touch();
      if (cell(v, c ^ 1) != 0) continue;  // column injectivity
      cell(q, c) = v;
      cell(v, c ^ 1) = q;
      search();
      tab = saved;
    }
    if (saved_used < n) {
      int v = saved_used + 1;
      cell(q, c) = v;
      cell(v, c ^ 1) = q;
      max_used = v;
      search();
      tab = saved;
      max_used = saved_used;
    }
  }
};

// BFS over a table's points from `base`, scanning columns in the fixed
// x1, x1^-1, x2, ... order; returns old-point visit order.
std::vector<int> bfs_order(const CosetTable& t, int base) {
  int n = t.degree;
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n + 1, 0);
  order.push_back(base);
  seen[base] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int p = order[head];
    for (int c = 0; c < 2 * static_cast<int>(t.action.size()); ++c) {
      int q = t.apply(p, letter_of(c));
      if (!seen[q]) {
        seen[q] = 1;
        order.push_back(q);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("coset table is not transitive");
  return order;
}

}  // namespace

bool CosetTable::operator<(const CosetTable& o) const {
  if (degree != o.degree) return degree < o.degree;
  return action < o.action;
}

int CosetTable::apply(int point, Letter x) const {
  if (x > 0) return action[x - 1][point - 1];
  const auto& col = action[-x - 1];
  for (int p = 1; p <= degree; ++p)
    if (col[p - 1] == point) return p;
  throw std::invalid_argument("coset table column is not a bijection");
}

int CosetTable::apply_word(int point, const Word& w) const {
  for (Letter x : w) point = apply(point, x);
  return point;
}

std::vector<CosetTable> enumerate_subgroups(const Presentation& P, int n,
                                            const EnumerationOptions& opt) {
  if (n < 1) throw std::invalid_argument("index must be at least 1");
  Searcher s(P, n, opt);
  s.search();
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

std::uint64_t count_subgroups(const Presentation& P, int n, const EnumerationOptions& opt) {
  return enumerate_subgroups(P, n, opt).size();
}

CosetTable canonicalize(const CosetTable& t, int base) {
  if (base < 1 || base > t.degree) throw std::invalid_argument("base point out of range");
  std::vector<int> order = bfs_order(t, base);
  std::vector<int> relabel(t.degree + 1, 0);  // old point -> new point
  for (int i = 0; i < t.degree; ++i) relabel[order[i]] = i + 1;

  CosetTable r;
  r.degree = t.degree;
  r.action.assign(t.action.size(), std::vector<int>(t.degree));
  for (std::size_t g = 0; g < t.action.size(); ++g)
    for (int p = 1; p <= t.degree; ++p)
      r.action[g][relabel[p] - 1] = relabel[t.action[g][p - 1]];
  return r;
}

bool check_table(const Presentation& P, const CosetTable& t) {
  if (t.degree < 1) return false;
  if (static_cast<int>(t.action.size()) != P.generator_count()) return false;
  for (const auto& col : t.action) {
    if (static_cast<int>(col.size()) != t.degree) return false;
    std::vector<char> hit(t.degree + 1, 0);
    for (int v : col) {
      if (v < 1 || v > t.degree || hit[v]) return false;
      hit[v] = 1;
    }
  }
  for (const Word& r : P.relators)
    for (int p = 1; p <= t.degree; ++p)
      if (t.apply_word(p, r) != p) return false;
  try {
    bfs_order(t, 1);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

namespace {

// Spanning tree of the table's BFS from point 1: for each point its tree
// word (a coset representative) and the (point, column) tree edges.
struct Transversal {
  std::vector<Word> rep;                       // rep[p-1] maps 1 to p
  std::vector<std::vector<char>> tree;         // tree[p-1][c]: edge used by BFS
};

Transversal schreier_transversal(const CosetTable& t) {
  int n = t.degree;
  int ncols = 2 * static_cast<int>(t.action.size());
  Transversal tr;
  tr.rep.assign(n, Word{});
  tr.tree.assign(n, std::vector<char>(ncols, 0));

  std::vector<int> order = bfs_order(t, 1);
  std::vector<char> seen(n + 1, 0);
  seen[1] = 1;
  for (int p : order) {
    for (int c = 0; c < ncols; ++c) {
      Letter x = letter_of(c);
      int q = t.apply(p, x);
      if (!seen[q]) {
        seen[q] = 1;
        tr.tree[p - 1][c] = 1;
        Word w = tr.rep[p - 1];
        w.push_back(x);
        tr.rep[q - 1] = free_reduce(w);
      }
    }
  }
  return tr;
}

// A (point, generator) pair is a tree edge when the BFS used it in either
// direction; those pairs carry trivial Schreier generators.
bool is_tree_pair(const Transversal& tr, const CosetTable& t, int p, int g) {
  int q = t.action[g - 1][p - 1];
  return tr.tree[p - 1][col_of(g)] || tr.tree[q - 1][col_of(-g)];
}

}  // namespace

SubgroupRecord subgroup_record(const Presentation& P, const CosetTable& t) {
  if (!check_table(P, t)) throw std::invalid_argument("invalid coset table for presentation");
  int n = t.degree;
  int g = P.generator_count();
  Transversal tr = schreier_transversal(t);

  // Index the non-tree (point, generator) pairs; these are the subgroup's
  // Schreier generators, n(g-1)+1 of them.
  std::vector<std::vector<int>> gen_index(n, std::vector<int>(g + 1, 0));
  std::vector<Word> schreier;
  for (int p = 1; p <= n; ++p) {
    for (int x = 1; x <= g; ++x) {
      if (is_tree_pair(tr, t, p, x)) continue;
      int q = t.action[x - 1][p - 1];
      Word w = tr.rep[p - 1];
      w.push_back(x);
      Word back = inverse_word(tr.rep[q - 1]);
      w.insert(w.end(), back.begin(), back.end());
      schreier.push_back(free_reduce(w));
      gen_index[p - 1][x] = static_cast<int>(schreier.size());
    }
  }

  std::vector<std::string> names;
  names.reserve(schreier.size());
  for (std::size_t i = 1; i <= schreier.size(); ++i) names.push_back("s" + std::to_string(i));

  // Rewrite each relator traced from each point as a word in the Schreier
  // generators: a step p --x--> px contributes the generator of (p, x) for
  // positive x and the inverse of the generator of (px, -x's base) otherwise.
  std::vector<Word> rewritten;
  for (const Word& r : P.relators) {
    for (int p = 1; p <= n; ++p) {
      Word w;
      int at = p;
      for (Letter x : r) {
        int next = t.apply(at, x);
        if (x > 0) {
          int idx = gen_index[at - 1][x];
          if (idx != 0) w.push_back(idx);
        } else {
          int idx = gen_index[next - 1][-x];
          if (idx != 0) w.push_back(-idx);
        }
        at = next;
      }
      rewritten.push_back(free_reduce(w));
    }
  }

  SubgroupRecord rec{t, std::move(schreier), Presentation(names, rewritten)};
  return rec;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<CosetTable>& tables) {
  for (const CosetTable& t : tables)
    if (!tables.empty() && t.degree != tables.front().degree)
      throw std::invalid_argument("conjugacy classes need tables of equal degree");

  // Conjugate stabilizers are exactly the stabilizers of different base
  // points, so the class key is the minimum relabeling over all bases.
  std::map<CosetTable, std::size_t> key_to_class;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    CosetTable best = canonicalize(tables[i], 1);
    for (int b = 2; b <= tables[i].degree; ++b) {
      CosetTable cand = canonicalize(tables[i], b);
      if (cand < best) best = cand;
    }
    auto it = key_to_class.find(best);
    if (it == key_to_class.end()) {
      key_to_class.emplace(std::move(best), classes.size());
      classes.push_back({i});
    } else {
      classes[it->second].push_back(i);
    }
  }
  return classes;
}

bool is_normal(const Presentation& P, const CosetTable& t) {
  SubgroupRecord rec = subgroup_record(P, t);
  // Normal iff every Schreier generator fixes every point, i.e. the whole
  // group permutes the subgroup's cosets through a regular action quotient.
  for (const Word& w : rec.schreier_generators)
    for (int p = 1; p <= t.degree; ++p)
      if (t.apply_word(p, w) != p) return false;
  return true;
}

}  // namespace census
