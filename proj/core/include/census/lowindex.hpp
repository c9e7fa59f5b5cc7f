#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "census/presentations.hpp"

namespace census {

// Search budget exhausted; distinct from "no subgroups found".
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

// Transitive permutation representation on right cosets. Points are 1-based
// and numbered in breadth-first discovery order from point 1 scanning
// columns x1, x1^-1, x2, x2^-1, ..., so each subgroup has exactly one table.
struct CosetTable {
  int degree = 0;
  // action[g][p-1] = image of point p under generator g+1.
  std::vector<std::vector<int>> action;

  bool operator==(const CosetTable&) const = default;
  bool operator<(const CosetTable& o) const;  // lexicographic on flattened action

  int apply(int point, Letter x) const;  // inverse letters by linear scan
  int apply_word(int point, const Word& w) const;
};

struct EnumerationOptions {
  std::uint64_t max_cells = 100000000;  // table cells touched before BudgetExceeded
};

// All index-n subgroups (stabilizers of point 1), one canonical table each,
// sorted lexicographically by flattened action.
std::vector<CosetTable> enumerate_subgroups(const Presentation& P, int n,
                                            const EnumerationOptions& opt = {});

std::uint64_t count_subgroups(const Presentation& P, int n,
                              const EnumerationOptions& opt = {});

struct SubgroupRecord {
  CosetTable table;
  std::vector<Word> schreier_generators;  // words in P's generators, all stabilizing 1
  Presentation presentation;              // n(g-1)+1 generators, n * |relators of P| relators
};

// Reidemeister-Schreier data for the point-1 stabilizer of t.
SubgroupRecord subgroup_record(const Presentation& P, const CosetTable& t);

// Partition of the input list: two tables land in one class iff some point
// relabeling (no fixed base point) intertwines all generator actions, i.e.
// the stabilizers are conjugate subgroups.
std::vector<std::vector<std::size_t>> conjugacy_classes(const std::vector<CosetTable>& tables);

// True iff the point-1 stabilizer is normal (equals every point stabilizer).
bool is_normal(const Presentation& P, const CosetTable& t);

// BFS relabeling from the given base point; on a canonical table, base 1 is
// the identity map.
CosetTable canonicalize(const CosetTable& t, int base = 1);

// Column bijectivity, relators acting as identity, transitivity.
bool check_table(const Presentation& P, const CosetTable& t);

}  // namespace census
