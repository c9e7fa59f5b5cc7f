#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "census/presentations.hpp"

namespace census {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  static IntegerMatrix identity(int n);

  Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix matmul(const IntegerMatrix& A, const IntegerMatrix& B);
IntegerMatrix transpose(const IntegerMatrix& A);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntegerMatrix A);

struct SmithResult {
  // d_1 | d_2 | ..., nonnegative, length min(rows, cols).
  std::vector<Int> diagonal;
  // Unimodular transforms with U * M * V = diag(diagonal).
  IntegerMatrix U, V;
};

SmithResult smith_normal_form(IntegerMatrix M);

// Basis of the integer kernel {v : M v = 0}, one column per basis vector.
// The lattice spanned is saturated (it is the full kernel).
IntegerMatrix integer_kernel(const IntegerMatrix& M);

struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;  // d_1 | d_2 | ..., each >= 2

  bool operator==(const AbelianGroup&) const = default;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;  // "Z^2 x Z/4", "Z", "0", ...
};

// Cokernel invariants of the relator exponent-sum matrix.
AbelianGroup abelianization(const Presentation& P);

// Exact count of surjective homomorphisms A -> Z/n (n = 1 counts the one
// map onto the trivial group). Moebius inversion over Hom counts.
Int surjections_to_cyclic(const AbelianGroup& A, long long n);

// Exhaustive count of pairs (a,b) in (Z/n)^2 generating Z/n. Guard n <= 200.
Int phi2_bruteforce(long long n);

struct Phi2Check {
  Int phi2;
  Int bound;  // (2n - phi(n)) * phi(n)
  bool holds = false;
};

// phi_2(n) = surjections_to_cyclic(Z^2, n), checked against the lower bound;
// for n <= 200 the formula path is cross-checked against phi2_bruteforce.
Phi2Check phi2_bound_check(long long n);

long long euler_phi(long long n);
long long divisor_count(long long N);

}  // namespace census
