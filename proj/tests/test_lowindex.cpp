#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "census/homology.hpp"
#include "census/lowindex.hpp"
#include "oracles.hpp"

using namespace census;

namespace {

Presentation modular() {
  return parse_presentation("gens: x y\nrel: x^2\nrel: y^3\n");
}

Presentation sym3() {
  return parse_presentation("gens: x y\nrel: x^2\nrel: y^3\nrel: (x y)^2\n");
}

}  // namespace

TEST_CASE("free group counts match the transitive-action recursion") {
  std::vector<unsigned long long> expect2 = oracle::free_group_counts(2, 6);
  for (int n = 1; n <= 6; ++n)
    CHECK(count_subgroups(free_presentation(2), n) == expect2[n - 1]);
  CHECK(expect2 == std::vector<unsigned long long>{1, 3, 13, 71, 461, 3447});

  std::vector<unsigned long long> expect3 = oracle::free_group_counts(3, 4);
  for (int n = 1; n <= 4; ++n)
    CHECK(count_subgroups(free_presentation(3), n) == expect3[n - 1]);

  for (int n = 1; n <= 8; ++n) CHECK(count_subgroups(free_presentation(1), n) == 1);
}

TEST_CASE("enumerated tables equal exhaustive brute force") {
  struct Case {
    Presentation P;
    int nmax;
  };
  for (const Case& c : {Case{free_presentation(2), 4}, Case{modular(), 5},
                        Case{free_abelian_presentation(2), 5}, Case{sym3(), 6}}) {
    for (int n = 1; n <= c.nmax; ++n) {
      std::vector<CosetTable> fast = enumerate_subgroups(c.P, n);
      std::vector<CosetTable> slow = oracle::brute_tables(c.P, n);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("abelian subgroup counts are divisor sums") {
  auto sigma = [](int n) {
    std::uint64_t s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += d;
    return s;
  };
  for (int n = 1; n <= 10; ++n)
    CHECK(count_subgroups(free_abelian_presentation(2), n) == sigma(n));
}

TEST_CASE("every emitted table passes validation") {
  for (int n = 1; n <= 5; ++n)
    for (const CosetTable& t : enumerate_subgroups(modular(), n)) {
      CHECK(check_table(modular(), t));
      CHECK(t.degree == n);
      CHECK(canonicalize(t) == t);  // already in base-1 canonical form
    }
}

TEST_CASE("table application handles inverse letters") {
  CosetTable t;
  t.degree = 3;
  t.action = {{2, 3, 1}};  // single generator 3-cycle
  CHECK(t.apply(1, 1) == 2);
  CHECK(t.apply(1, -1) == 3);
  CHECK(t.apply_word(1, {1, 1, 1}) == 1);
  CHECK(t.apply_word(2, {-1, -1}) == 3);
  CHECK(t.apply_word(2, {}) == 2);
}

TEST_CASE("canonicalize relabels any base to the same subgroup table") {
  std::vector<CosetTable> tables = enumerate_subgroups(modular(), 4);
  std::set<CosetTable> all(tables.begin(), tables.end());
  for (const CosetTable& t : tables)
    for (int base = 1; base <= t.degree; ++base) {
      CosetTable c = canonicalize(t, base);
      CHECK(check_table(modular(), c));
      CHECK(all.count(c) == 1);  // conjugate stabilizers stay within the census
    }
}

TEST_CASE("conjugacy classes and normality agree") {
  // S3: three conjugate order-2 subgroups at index 3, one normal A3 at index 2
  std::vector<CosetTable> idx3 = enumerate_subgroups(sym3(), 3);
  REQUIRE(idx3.size() == 3);
  std::vector<std::vector<std::size_t>> cc = conjugacy_classes(idx3);
  CHECK(cc.size() == 1);
  CHECK(cc[0].size() == 3);
  for (const CosetTable& t : idx3) CHECK_FALSE(is_normal(sym3(), t));

  std::vector<CosetTable> idx2 = enumerate_subgroups(sym3(), 2);
  REQUIRE(idx2.size() == 1);
  CHECK(is_normal(sym3(), idx2[0]));

  // abelian group: everything normal, every class a singleton
  std::vector<CosetTable> ab = enumerate_subgroups(free_abelian_presentation(2), 4);
  CHECK(conjugacy_classes(ab).size() == ab.size());
  for (const CosetTable& t : ab) CHECK(is_normal(free_abelian_presentation(2), t));
}

TEST_CASE("class partition covers each table exactly once") {
  std::vector<CosetTable> tables = enumerate_subgroups(modular(), 6);
  std::vector<std::vector<std::size_t>> cc = conjugacy_classes(tables);
  std::vector<bool> hit(tables.size(), false);
  for (const std::vector<std::size_t>& cls : cc)
    for (std::size_t i : cls) {
      CHECK_FALSE(hit[i]);
      hit[i] = true;
    }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

TEST_CASE("schreier generators stabilize the base point") {
  Presentation P = modular();
  for (const CosetTable& t : enumerate_subgroups(P, 6)) {
    SubgroupRecord rec = subgroup_record(P, t);
    for (const Word& w : rec.schreier_generators) CHECK(t.apply_word(1, w) == 1);
  }
}

TEST_CASE("free subgroups have the Nielsen-Schreier rank") {
  Presentation F2 = free_presentation(2);
  for (int n = 2; n <= 4; ++n)
    for (const CosetTable& t : enumerate_subgroups(F2, n)) {
      SubgroupRecord rec = subgroup_record(F2, t);
      CHECK(static_cast<int>(rec.schreier_generators.size()) == n + 1);  // n(g-1)+1
      CHECK(rec.presentation.relators.empty());
      CHECK(abelianization(rec.presentation) == AbelianGroup{n + 1, {}});
    }
}

TEST_CASE("rewritten presentations abelianize to the cover homology") {
  // index-2 subgroup of the genus-2 surface group is a genus-3 surface group
  Presentation S = fuchsian_presentation(Signature(2, 0, {}));
  std::vector<CosetTable> tables = enumerate_subgroups(S, 2);
  CHECK(tables.size() == 15);  // 2^4 - 1 index-2 subgroups
  for (const CosetTable& t : tables) {
    SubgroupRecord rec = subgroup_record(S, t);
    CHECK(abelianization(rec.presentation) == AbelianGroup{6, {}});
  }

  // Klein bottle group: its index-2 subgroups are Klein or torus
  Presentation K({"a", "b"}, {parse_word("a b a b^-1", {"a", "b"})});
  std::set<std::string> names;
  for (const CosetTable& t : enumerate_subgroups(K, 2))
    names.insert(abelianization(subgroup_record(K, t).presentation).str());
  CHECK(names == std::set<std::string>{"Z x Z/2", "Z^2"});
}

TEST_CASE("a tiny budget raises BudgetExceeded") {
  EnumerationOptions opt;
  opt.max_cells = 50;
  CHECK_THROWS_AS(enumerate_subgroups(free_presentation(2), 5, opt), BudgetExceeded);
}

TEST_CASE("subgroup record rejects tables from another presentation") {
  CosetTable t;
  t.degree = 2;
  t.action = {{2, 1}};
  CHECK_THROWS_AS(subgroup_record(modular(), t), std::invalid_argument);
}
