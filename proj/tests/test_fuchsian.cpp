#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "census/fuchsian.hpp"
#include "census/presentations.hpp"
#include "oracles.hpp"

using namespace census;

namespace {

const Signature kModular{0, 1, {2, 3}};

}  // namespace

TEST_CASE("orbifold Euler characteristics of standard signatures") {
  CHECK(orbifold_euler(kModular) == Rational(-1, 6));
  CHECK(orbifold_euler(Signature(2, 0, {})) == Rational(-2));
  CHECK(orbifold_euler(Signature(0, 0, {2, 3, 7})) == Rational(-1, 42));
  CHECK(orbifold_euler(Signature(0, 0, {2, 4, 5})) == Rational(-1, 20));
  CHECK(orbifold_euler(Signature(1, 0, {})) == Rational(0));
  CHECK(orbifold_euler(Signature(0, 2, {})) == Rational(0));
  CHECK(orbifold_euler(Signature(0, 0, {2, 2, 2, 2})) == Rational(0));
  CHECK(orbifold_euler(Signature(0, 1, {})) == Rational(1));
}

TEST_CASE("signature text round trip and validation") {
  for (const char* s : {"0,1;2,3", "2,0", "0,0;2,3,7", "1,2;4,4,6"}) {
    Signature sig = Signature::parse(s);
    CHECK(sig.str() == s);
    CHECK(Signature::parse(sig.str()) == sig);
  }
  CHECK(Signature::parse("0,1;3,2") == kModular);  // periods sort on construction
  CHECK_THROWS_AS(Signature::parse("0,1;1"), std::invalid_argument);
  CHECK_THROWS_AS(Signature::parse("-1,0;"), std::invalid_argument);
  CHECK_THROWS_AS(Signature::parse("0,1,2;3"), std::invalid_argument);
  CHECK(Signature::parse("0,2") == Signature(0, 2, {}));  // semicolon optional when torsion-free
}

TEST_CASE("signature presentation has torsion, cusp and surface generators") {
  Presentation P = fuchsian_presentation(kModular);
  CHECK(P.generator_names == std::vector<std::string>{"x1", "x2", "p1"});
  REQUIRE(P.relators.size() == 3);  // x1^2, x2^3, x1 x2 p1
  CHECK(P.relators[0] == Word({1, 1}));
  CHECK(P.relators[1] == Word({2, 2, 2}));
  CHECK(P.relators[2] == Word({1, 2, 3}));

  Presentation Q = fuchsian_presentation(Signature(1, 0, {5}));
  CHECK(Q.generator_names == std::vector<std::string>{"x1", "a1", "b1"});
  REQUIRE(Q.relators.size() == 2);
  CHECK(Q.relators[1] == Word({1, 2, 3, -2, -3}));  // x1 [a1, b1]
}

TEST_CASE("isomorphism of signature groups is periods plus genus or rank") {
  // Cocompact: genus and periods both matter.
  CHECK(fuchsian_isomorphic(Signature(2, 0, {}), Signature(2, 0, {})));
  CHECK_FALSE(fuchsian_isomorphic(Signature(2, 0, {}), Signature(3, 0, {})));
  CHECK_FALSE(fuchsian_isomorphic(Signature(2, 0, {2}), Signature(2, 0, {})));
  // Cusped: only 2g + k and the periods matter (free products of cyclics).
  CHECK(fuchsian_isomorphic(Signature(0, 3, {3}), Signature(1, 1, {3})));
  CHECK(fuchsian_isomorphic(Signature(0, 5, {}), Signature(2, 1, {})));
  CHECK_FALSE(fuchsian_isomorphic(Signature(0, 3, {3}), Signature(0, 2, {3})));
  CHECK_FALSE(fuchsian_isomorphic(Signature(0, 3, {3}), Signature(0, 3, {2})));
  // Cocompact never matches cusped, even with equal Euler characteristic.
  CHECK_FALSE(fuchsian_isomorphic(Signature(2, 0, {}), Signature(1, 2, {})));
}

TEST_CASE("isomorphism is an equivalence relation on a signature pool") {
  std::vector<Signature> pool = {
      Signature(0, 1, {2, 3}),   Signature(0, 3, {3}),    Signature(1, 1, {3}),
      Signature(0, 1, {3, 3}),   Signature(2, 0, {}),     Signature(0, 0, {2, 3, 7}),
      Signature(0, 2, {2, 2}),   Signature(1, 0, {2, 2}), Signature(0, 1, {2, 2, 3}),
      Signature(1, 1, {2, 2, 3})};
  for (const Signature& a : pool) CHECK(fuchsian_isomorphic(a, a));
  for (const Signature& a : pool)
    for (const Signature& b : pool) {
      CHECK(fuchsian_isomorphic(a, b) == fuchsian_isomorphic(b, a));
      for (const Signature& c : pool)
        if (fuchsian_isomorphic(a, b) && fuchsian_isomorphic(b, c))
          CHECK(fuchsian_isomorphic(a, c));
    }
}

TEST_CASE("index-2 subgroup of the modular group has signature (0,1;3,3)") {
  Presentation P = fuchsian_presentation(kModular);
  std::vector<CosetTable> tables = enumerate_subgroups(P, 2);
  REQUIRE(tables.size() == 1);
  CHECK(subgroup_signature(kModular, tables[0]) == Signature(0, 1, {3, 3}));
  // Order-3 classes double, order-2 classes vanish.
  CHECK(torsion_class_count(kModular, tables[0], 3) == 2);
  CHECK(torsion_class_count(kModular, tables[0], 2) == 0);
}

TEST_CASE("degree-1 cover is the root itself") {
  Presentation P = fuchsian_presentation(kModular);
  std::vector<CosetTable> tables = enumerate_subgroups(P, 1);
  REQUIRE(tables.size() == 1);
  CHECK(subgroup_signature(kModular, tables[0]) == kModular);
  CHECK(torsion_class_count(kModular, tables[0], 2) == 1);
  CHECK(torsion_class_count(kModular, tables[0], 3) == 1);
}

TEST_CASE("Riemann-Hurwitz holds exactly for every enumerated cover") {
  struct Case {
    Signature root;
    int nmax;
  };
  const Case cases[] = {
      {kModular, 7},
      {Signature(0, 0, {2, 3, 7}), 6},
      {Signature(0, 1, {2, 4}), 5},
      {Signature(1, 1, {2}), 4},
  };
  for (const Case& c : cases) {
    Presentation P = fuchsian_presentation(c.root);
    Rational chi = orbifold_euler(c.root);
    for (int n = 1; n <= c.nmax; ++n) {
      for (const CosetTable& t : enumerate_subgroups(P, n)) {
        Signature sub = subgroup_signature(c.root, t);
        CHECK(orbifold_euler(sub) == chi * n);
        // Cover periods divide root periods; cusped roots have cusped covers.
        for (int m : sub.periods) {
          bool divides = false;
          for (int mi : c.root.periods) divides = divides || mi % m == 0;
          CHECK(divides);
        }
        if (c.root.cusps > 0) CHECK(sub.cusps > 0);
      }
    }
  }
}

TEST_CASE("torsion class counts reproduce the period contribution") {
  // Summing (1 - 1/m) * count over all candidate orders m recovers the
  // period part of the cover signature, order by order.
  Presentation P = fuchsian_presentation(kModular);
  for (int n = 1; n <= 6; ++n) {
    for (const CosetTable& t : enumerate_subgroups(P, n)) {
      Signature sub = subgroup_signature(kModular, t);
      for (int m : {2, 3}) {
        long long expected = 0;
        for (int p : sub.periods)
          if (p == m) ++expected;
        CHECK(torsion_class_count(kModular, t, m) == expected);
      }
    }
  }
}

TEST_CASE("subgroup_signature rejects tables over the wrong generator count") {
  Presentation F = free_presentation(2);
  std::vector<CosetTable> tables = enumerate_subgroups(F, 2);
  REQUIRE(!tables.empty());
  CHECK_THROWS_AS(subgroup_signature(kModular, tables[0]), std::logic_error);
}

TEST_CASE("modular isomorphism count equals the divisor-lattice count") {
  const std::uint64_t expect[] = {1, 1, 2, 2, 1, 4, 2, 2, 4, 4};
  for (int n = 1; n <= 10; ++n) {
    CHECK(e_n_fuchsian(kModular, n) == expect[n - 1]);
    CHECK(lattice_point_count(kModular, n) == expect[n - 1]);
  }
}

TEST_CASE("lattice count enumerates Euler characteristic solutions") {
  // n = 6: solutions of 3a + 4b + 6t = 18 with t = 2g + k >= 1 are
  // (a,b,t) = (4,0,1), (0,3,1), (2,0,2), (0,0,3).
  std::uint64_t brute = 0;
  for (int a = 0; 3 * a <= 18; ++a)
    for (int b = 0; 3 * a + 4 * b <= 18; ++b) {
      int rest = 18 - 3 * a - 4 * b;
      if (rest % 6 == 0 && rest / 6 >= 1) ++brute;
    }
  CHECK(lattice_point_count(kModular, 6) == brute);
  CHECK(brute == 4);
}

TEST_CASE("torsion-free roots have exactly one class per index") {
  CHECK(lattice_point_count(Signature(0, 3, {}), 1) == 1);
  CHECK(lattice_point_count(Signature(0, 3, {}), 7) == 1);
  CHECK(lattice_point_count(Signature(1, 1, {}), 5) == 1);
  // Surface-with-cusp groups are free: every index has one isomorphism type.
  for (int n = 1; n <= 5; ++n) CHECK(e_n_fuchsian(Signature(0, 2, {}), n) == 1);
}

TEST_CASE("lattice count requires negative Euler characteristic") {
  CHECK_THROWS_AS(lattice_point_count(Signature(0, 1, {}), 2), std::invalid_argument);
  CHECK_THROWS_AS(lattice_point_count(Signature(1, 0, {}), 2), std::invalid_argument);
  CHECK_THROWS_AS(lattice_point_count(Signature(0, 0, {2, 2, 2, 2}), 3),
                  std::invalid_argument);
}

TEST_CASE("cocompact lattice count bounds the enumerated class count") {
  Signature root(0, 0, {2, 3, 7});
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t enumerated = e_n_fuchsian(root, n);
    CHECK(enumerated <= lattice_point_count(root, n));
  }
}

TEST_CASE("partition counts match the brute-force oracle") {
  struct Case {
    std::vector<int> parts;
    int n;
  };
  const Case cases[] = {{{1, 2}, 4},  {{1}, 9},      {{2}, 5},      {{2, 3}, 12},
                        {{1, 2}, 0},  {{3, 4, 6}, 24}, {{2, 2, 3}, 9}, {{5, 7}, 23}};
  for (const Case& c : cases)
    CHECK(partition_count(c.parts, c.n) == oracle::brute_partitions(c.parts, c.n));
  CHECK(partition_count({1, 2}, 4) == Int(3));
  CHECK(partition_count({2}, 5) == Int(0));
  CHECK(partition_count({1}, 9) == Int(1));
}

TEST_CASE("partition count is nondecreasing along multiples of the lcm") {
  std::vector<int> parts = {2, 3};
  Int prev = partition_count(parts, 0);
  for (int n = 6; n <= 60; n += 6) {
    Int cur = partition_count(parts, n);
    CHECK(cur >= prev);
    prev = cur;
  }
}
