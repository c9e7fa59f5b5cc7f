#include "census/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace census {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntegerMatrix matmul(const IntegerMatrix& A, const IntegerMatrix& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matmul dimension mismatch");
  IntegerMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& a = A.at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += a * B.at(k, j);
    }
  return C;
}

IntegerMatrix transpose(const IntegerMatrix& A) {
  IntegerMatrix T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Int determinant(IntegerMatrix A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant needs a square matrix");
  const int n = A.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
    prev = A.at(k, k);
  }
  return sign * A.at(n - 1, n - 1);
}

namespace {

// Row/column operations applied in lockstep to the working matrix and the
// accumulated transform, keeping U*M*V = D true throughout.
struct SnfWork {
  IntegerMatrix D, U, V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
    for (int j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
    for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int j = 0; j < D.cols; ++j) D.at(dst, j) += q * D.at(src, j);
    for (int j = 0; j < U.cols; ++j) U.at(dst, j) += q * U.at(src, j);
  }
  void add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < D.rows; ++i) D.at(i, dst) += q * D.at(i, src);
    for (int i = 0; i < V.rows; ++i) V.at(i, dst) += q * V.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < D.cols; ++j) D.at(r, j) = -D.at(r, j);
    for (int j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
  }
};

}  // namespace

SmithResult smith_normal_form(IntegerMatrix M) {
  const int r = M.rows, c = M.cols;
  SnfWork w{std::move(M), IntegerMatrix::identity(r), IntegerMatrix::identity(c)};
  const int steps = std::min(r, c);

  for (int t = 0; t < steps; ++t) {
  restart:
    // Pivot: smallest nonzero absolute value in the trailing submatrix.
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        const Int& v = w.D.at(i, j);
        if (v == 0) continue;
        if (pi < 0 || abs(v) < abs(w.D.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    // Clear row and column t; a nonzero remainder becomes the new, strictly
    // smaller pivot, so this terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (w.D.at(i, t) == 0) continue;
        Int q = w.D.at(i, t) / w.D.at(t, t);
        w.add_row(i, t, -q);
        if (w.D.at(i, t) != 0) {
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (w.D.at(t, j) == 0) continue;
        Int q = w.D.at(t, j) / w.D.at(t, t);
        w.add_col(j, t, -q);
        if (w.D.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
    }

    // Divisibility: the pivot must divide every trailing entry.
    for (int i = t + 1; i < r; ++i)
      for (int j = t + 1; j < c; ++j)
        if (w.D.at(i, j) % w.D.at(t, t) != 0) {
          w.add_row(t, i, 1);
          goto restart;
        }
    if (w.D.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult res;
  res.diagonal.reserve(steps);
  for (int t = 0; t < steps; ++t) res.diagonal.push_back(w.D.at(t, t));
  res.U = std::move(w.U);
  res.V = std::move(w.V);
  return res;
}

IntegerMatrix integer_kernel(const IntegerMatrix& M) {
  SmithResult s = smith_normal_form(M);
  std::vector<int> zero_cols;
  for (int j = 0; j < M.cols; ++j) {
    bool zero = j >= static_cast<int>(s.diagonal.size()) || s.diagonal[j] == 0;
    if (zero) zero_cols.push_back(j);
  }
  IntegerMatrix K(M.cols, static_cast<int>(zero_cols.size()));
  for (int b = 0; b < K.cols; ++b)
    for (int i = 0; i < M.cols; ++i) K.at(i, b) = s.V.at(i, zero_cols[b]);
  return K;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::string out;
  if (rank == 1)
    out = "Z";
  else if (rank > 1)
    out = "Z^" + std::to_string(rank);
  for (const Int& d : torsion) {
    if (!out.empty()) out += " x ";
    out += "Z/" + d.str();
  }
  return out;
}

AbelianGroup abelianization(const Presentation& P) {
  const int g = P.generator_count();
  IntegerMatrix M(static_cast<int>(P.relators.size()), g);
  for (size_t i = 0; i < P.relators.size(); ++i)
    for (Letter x : P.relators[i]) M.at(static_cast<int>(i), std::abs(x) - 1) += x > 0 ? 1 : -1;

  AbelianGroup A;
  if (M.rows == 0) {
    A.rank = g;
    return A;
  }
  SmithResult s = smith_normal_form(std::move(M));
  int nonzero = 0;
  for (const Int& d : s.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) A.torsion.push_back(d);
  }
  std::sort(A.torsion.begin(), A.torsion.end());
  A.rank = g - nonzero;
  return A;
}

namespace {

int mobius(long long n) {
  int mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

Int hom_count(const AbelianGroup& A, long long d) {
  Int h = 1;
  for (int i = 0; i < A.rank; ++i) h *= d;
  for (const Int& t : A.torsion) h *= gcd(t, Int(d));
  return h;
}

}  // namespace

Int surjections_to_cyclic(const AbelianGroup& A, long long n) {
  if (n < 1) throw std::invalid_argument("modulus must be >= 1");
  Int total = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 0) continue;
    total += mu * hom_count(A, d);
  }
  return total;
}

Int phi2_bruteforce(long long n) {
  if (n < 1 || n > 200) throw std::invalid_argument("brute-force path limited to n <= 200");
  Int count = 0;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      if (std::gcd(std::gcd(a, b), n) == 1) ++count;
  return count;
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long long divisor_count(long long N) {
  if (N < 1) throw std::invalid_argument("divisor_count needs N >= 1");
  long long count = 1;
  for (long long p = 2; p * p <= N; ++p) {
    if (N % p) continue;
    int e = 0;
    while (N % p == 0) {
      N /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (N > 1) count *= 2;
  return count;
}

Phi2Check phi2_bound_check(long long n) {
  if (n < 2) throw std::invalid_argument("phi2 bound needs n >= 2");
  AbelianGroup z2;
  z2.rank = 2;
  Phi2Check out;
  out.phi2 = surjections_to_cyclic(z2, n);
  if (n <= 200 && out.phi2 != phi2_bruteforce(n))
    throw std::logic_error("phi2 formula and brute force disagree");
  long long phi = euler_phi(n);
  out.bound = Int(2 * n - phi) * phi;
  out.holds = out.phi2 >= out.bound;
  return out;
}

}  // namespace census
