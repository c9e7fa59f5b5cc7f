#include "doctest.h"

#include <random>

#include "census/homology.hpp"
#include "oracles.hpp"

using namespace census;

namespace {

IntegerMatrix make(int r, int c, std::initializer_list<long long> vals) {
  IntegerMatrix M(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) M.at(i, j) = *it++;
  return M;
}

}  // namespace

TEST_CASE("matrix basics") {
  IntegerMatrix I = IntegerMatrix::identity(3);
  IntegerMatrix A = make(3, 3, {1, 2, 3, 0, 1, 4, 5, 6, 0});
  CHECK(matmul(A, I) == A);
  CHECK(matmul(I, A) == A);
  CHECK(transpose(transpose(A)) == A);
  CHECK(determinant(A) == 1);
  CHECK(determinant(make(2, 2, {2, 0, 0, 3})) == 6);
  CHECK(determinant(make(2, 2, {1, 2, 2, 4})) == 0);
}

TEST_CASE("smith normal form on known matrices") {
  SmithResult s = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
  CHECK(s.diagonal == std::vector<Int>{1, 6});

  s = smith_normal_form(make(2, 2, {2, 4, 4, 8}));
  CHECK(s.diagonal == std::vector<Int>{2, 0});

  s = smith_normal_form(make(3, 2, {1, 0, 0, 1, 0, 0}));
  CHECK(s.diagonal == std::vector<Int>{1, 1});

  s = smith_normal_form(make(2, 3, {6, 10, 15, 0, 0, 0}));
  CHECK(s.diagonal == std::vector<Int>{1, 0});
}

TEST_CASE("smith normal form transform identity on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerMatrix M(dim(rng), dim(rng));
    for (Int& e : M.entries) e = val(rng);
    SmithResult s = smith_normal_form(M);

    IntegerMatrix D = matmul(matmul(s.U, M), s.V);
    for (int i = 0; i < D.rows; ++i)
      for (int j = 0; j < D.cols; ++j)
        CHECK(D.at(i, j) == (i == j ? s.diagonal[i] : Int(0)));

    Int du = determinant(s.U), dv = determinant(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
    }
  }
}

TEST_CASE("integer kernel is a saturated null space") {
  IntegerMatrix K = integer_kernel(make(1, 3, {2, 4, 6}));
  CHECK(K.cols == 2);
  IntegerMatrix M = make(1, 3, {2, 4, 6});
  IntegerMatrix prod = matmul(M, K);
  for (const Int& e : prod.entries) CHECK(e == 0);

  // x + y = 0 has the primitive kernel vector (1, -1), not a multiple
  K = integer_kernel(make(1, 2, {3, 3}));
  REQUIRE(K.cols == 1);
  Int g = boost::multiprecision::gcd(K.at(0, 0), K.at(1, 0));
  CHECK(g == 1);

  K = integer_kernel(IntegerMatrix::identity(3));
  CHECK(K.cols == 0);
}

TEST_CASE("abelianization of standard presentations") {
  CHECK(abelianization(free_presentation(2)) == AbelianGroup{2, {}});
  CHECK(abelianization(free_abelian_presentation(3)) == AbelianGroup{3, {}});

  // Klein bottle <a, b | a b a b^-1>
  Presentation K({"a", "b"}, {parse_word("a b a b^-1", {"a", "b"})});
  CHECK(abelianization(K) == AbelianGroup{1, {2}});

  // trefoil knot group <x, y | x^2 y^-3>
  Presentation T({"x", "y"}, {parse_word("x^2 y^-3", {"x", "y"})});
  CHECK(abelianization(T) == AbelianGroup{1, {}});

  Presentation Q8({"x", "y"},
                  {parse_word("x^2 (x y)^-2", {"x", "y"}),
                   parse_word("x^2 y^-2", {"x", "y"})});
  CHECK(abelianization(Q8) == AbelianGroup{0, {2, 2}});

  CHECK(abelianization(fuchsian_presentation(Signature(2, 0, {}))) == AbelianGroup{4, {}});
}

TEST_CASE("abelian group names") {
  CHECK(AbelianGroup{0, {}}.str() == "0");
  CHECK(AbelianGroup{1, {}}.str() == "Z");
  CHECK(AbelianGroup{2, {3}}.str() == "Z^2 x Z/3");
  CHECK(AbelianGroup{0, {2, 4}}.str() == "Z/2 x Z/4");
}

TEST_CASE("cyclic surjection counts match brute force") {
  std::vector<AbelianGroup> groups = {
      {0, {}}, {1, {}}, {2, {}}, {0, {2}}, {0, {2, 4}}, {1, {6}}, {0, {3, 9}}, {2, {2}},
  };
  for (const AbelianGroup& A : groups)
    for (long long n : {1, 2, 3, 4, 6, 8, 9, 12})
      CHECK(surjections_to_cyclic(A, n) == Int(oracle::brute_surjections(A, n)));
}

TEST_CASE("surjection counts of Z^2 in closed form") {
  // phi_2(n) = n^2 prod_{p | n} (1 - p^-2)
  CHECK(surjections_to_cyclic({2, {}}, 2) == 3);
  CHECK(surjections_to_cyclic({2, {}}, 4) == 12);
  CHECK(surjections_to_cyclic({2, {}}, 6) == 24);
  CHECK(surjections_to_cyclic({2, {}}, 12) == 96);
}

TEST_CASE("phi2 bound holds and matches brute force") {
  CHECK_THROWS_AS(phi2_bound_check(1), std::invalid_argument);
  for (long long n = 2; n <= 60; ++n) {
    Phi2Check c = phi2_bound_check(n);
    CHECK(c.holds);
    CHECK(c.phi2 == phi2_bruteforce(n));
    CHECK(c.phi2 >= c.bound);
  }
  CHECK(phi2_bound_check(2).phi2 == 3);
  CHECK(phi2_bound_check(2).bound == 3);
  CHECK(phi2_bound_check(6).phi2 == 24);
  CHECK(phi2_bound_check(6).bound == 20);
}

TEST_CASE("arithmetic helpers") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(192) == 14);
  CHECK(divisor_count(97) == 2);
}
