#include "census/crystallographic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "census/finitegroups.hpp"

namespace census {

namespace {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<std::vector<Rational>>;

Rational frac_part(const Rational& r) {
  Int num = numerator(r), den = denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) q -= 1;  // floor division
  return r - Rational(q);
}

IntegerMatrix identity_matrix(int n) { return IntegerMatrix::identity(n); }

bool is_identity(const IntegerMatrix& m) { return m == IntegerMatrix::identity(m.rows); }

IntegerMatrix mat_sub(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix r = a;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(i, j) -= b.at(i, j);
  return r;
}

RatVec mat_vec(const IntegerMatrix& S, const RatVec& v) {
  RatVec out(S.rows, Rational(0));
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) out[i] += Rational(S.at(i, j)) * v[j];
  return out;
}

std::vector<Int> mat_vec_int(const IntegerMatrix& S, const std::vector<Int>& v) {
  std::vector<Int> out(S.rows, 0);
  for (int i = 0; i < S.rows; ++i)
    for (int j = 0; j < S.cols; ++j) out[i] += S.at(i, j) * v[j];
  return out;
}

int matrix_order(const IntegerMatrix& S) {
  IntegerMatrix acc = S;
  for (int k = 1; k <= 10000; ++k) {
    if (is_identity(acc)) return k;
    acc = matmul(acc, S);
  }
  throw std::invalid_argument("linear part does not have finite order");
}

// Exact affine isometry x -> Sx + t, composition (a*b)(x) = a(b(x)).
struct AffineElement {
  IntegerMatrix S;
  RatVec t;
};

AffineElement affine_identity(int n) {
  return {IntegerMatrix::identity(n), RatVec(n, Rational(0))};
}

AffineElement affine_mul(const AffineElement& a, const AffineElement& b) {
  AffineElement r{matmul(a.S, b.S), mat_vec(a.S, b.t)};
  for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] += a.t[i];
  return r;
}

AffineElement affine_inverse(const AffineElement& a) {
  IntegerMatrix sinv = IntegerMatrix::identity(a.S.rows);
  int ord = matrix_order(a.S);
  for (int k = 1; k < ord; ++k) sinv = matmul(sinv, a.S);
  RatVec t = mat_vec(sinv, a.t);
  for (Rational& x : t) x = -x;
  return {std::move(sinv), std::move(t)};
}

bool affine_eq(const AffineElement& a, const AffineElement& b) {
  return a.S == b.S && a.t == b.t;
}

// Gauss-Jordan inverse of a square rational matrix.
RatMat rat_inverse(RatMat m) {
  int n = static_cast<int>(m.size());
  RatMat inv(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular matrix in projection computation");
    std::swap(m[col], m[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rational lead = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Solve A x = b exactly; nullopt when inconsistent.
std::optional<RatVec> rat_solve(const IntegerMatrix& A, const RatVec& b) {
  int rows = A.rows, cols = A.cols;
  RatMat m(rows, RatVec(cols + 1, Rational(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = Rational(A.at(i, j));
    m[i][cols] = b[i];
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational lead = m[rank][col];
    for (int j = col; j <= cols; ++j) m[rank][j] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int j = col; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  // Inconsistent iff a zero row has nonzero right side.
  for (int r = 0; r < rows; ++r) {
    bool zero = true;
    for (int j = 0; j < cols; ++j)
      if (m[r][j] != 0) zero = false;
    if (zero && m[r][cols] != 0) return std::nullopt;
  }
  RatVec x(cols, Rational(0));
  int at = 0;
  for (int col = 0; col < cols && at < rows; ++col) {
    bool is_pivot = m[at][col] == 1;
    for (int j = 0; j < col && is_pivot; ++j)
      if (m[at][j] != 0) is_pivot = false;
    if (is_pivot) {
      x[col] = m[at][cols];
      ++at;
    }
  }
  return x;
}

AffineElement op_element(const CrystalGroup& C, std::size_t k) {
  return {C.ops[k].matrix, C.ops[k].translation};
}

std::size_t identity_op(const CrystalGroup& C) {
  for (std::size_t k = 0; k < C.ops.size(); ++k)
    if (is_identity(C.ops[k].matrix)) return k;
  throw std::invalid_argument("crystal group has no identity entry");
}

// Word for the translation by an integer vector, as powers of e1..en.
Word translation_word(const std::vector<Int>& v) {
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long count = v[i].convert_to<long long>();
    Letter x = static_cast<Letter>(i + 1);
    for (long long k = 0; k < std::llabs(count); ++k) w.push_back(count > 0 ? x : -x);
  }
  return w;
}

}  // namespace

void CrystalGroup::validate() const {
  int n = dim;
  if (n < 1) throw std::invalid_argument("crystal group dimension must be positive");
  if (gram.rows != n || gram.cols != n)
    throw std::invalid_argument("gram matrix must be dim x dim");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram.at(i, j) != gram.at(j, i))
        throw std::invalid_argument("gram matrix must be symmetric");
  for (int k = 1; k <= n; ++k) {
    IntegerMatrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = gram.at(i, j);
    if (determinant(lead) <= 0)
      throw std::invalid_argument("gram matrix must be positive definite");
  }

  if (ops.empty()) throw std::invalid_argument("crystal group needs at least the identity op");
  std::map<std::vector<Int>, std::size_t> by_matrix;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const CrystalOp& op = ops[k];
    if (op.matrix.rows != n || op.matrix.cols != n)
      throw std::invalid_argument("op matrix must be dim x dim");
    if (static_cast<int>(op.translation.size()) != n)
      throw std::invalid_argument("op translation must have dim entries");
    for (const Rational& r : op.translation)
      if (r < 0 || r >= 1)
        throw std::invalid_argument("op translations must be reduced into [0, 1)");
    if (!(matmul(matmul(transpose(op.matrix), gram), op.matrix) == gram))
      throw std::invalid_argument("op matrix does not preserve the gram form");
    if (!by_matrix.emplace(op.matrix.entries, k).second)
      throw std::invalid_argument("two ops share a linear part");
  }
  std::size_t id = identity_op(*this);
  for (const Rational& r : ops[id].translation)
    if (r != 0) throw std::invalid_argument("identity op must have zero translation");

  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = 0; b < ops.size(); ++b) {
      IntegerMatrix prod = matmul(ops[a].matrix, ops[b].matrix);
      auto it = by_matrix.find(prod.entries);
      if (it == by_matrix.end())
        throw std::invalid_argument("ops are not closed under composition");
      RatVec t = mat_vec(ops[a].matrix, ops[b].translation);
      for (int i = 0; i < n; ++i) {
        t[i] += ops[a].translation[i];
        if (frac_part(t[i] - ops[it->second].translation[i]) != 0)
          throw std::invalid_argument("vector system is not closed mod Z^n");
      }
    }
  }
}

bool is_free_abelian(const CrystalGroup& C) {
  C.validate();
  return C.ops.size() == 1;
}

Presentation crystal_presentation(const CrystalGroup& C) {
  C.validate();
  int n = C.dim;
  std::size_t id = identity_op(C);

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  // Letter of the k-th op; identity gets none.
  std::vector<Letter> op_letter(C.ops.size(), 0);
  {
    int next = n + 1;
    for (std::size_t k = 0; k < C.ops.size(); ++k) {
      if (k == id) continue;
      names.push_back("g" + std::to_string(next - n));
      op_letter[k] = next++;
    }
  }

  std::vector<Word> relators;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) relators.push_back(Word{i, j, -i, -j});

  for (std::size_t k = 0; k < C.ops.size(); ++k) {
    if (k == id) continue;
    Letter g = op_letter[k];
    for (int i = 0; i < n; ++i) {
      std::vector<Int> col(n);
      for (int r = 0; r < n; ++r) col[r] = C.ops[k].matrix.at(r, i);
      Word rel{g, static_cast<Letter>(i + 1), -g};
      Word img = inverse_word(translation_word(col));
      rel.insert(rel.end(), img.begin(), img.end());
      relators.push_back(std::move(rel));
    }
  }

  std::map<std::vector<Int>, std::size_t> by_matrix;
  for (std::size_t k = 0; k < C.ops.size(); ++k) by_matrix[C.ops[k].matrix.entries] = k;
  for (std::size_t a = 0; a < C.ops.size(); ++a) {
    if (a == id) continue;
    for (std::size_t b = 0; b < C.ops.size(); ++b) {
      if (b == id) continue;
      IntegerMatrix prod = matmul(C.ops[a].matrix, C.ops[b].matrix);
      std::size_t c = by_matrix.at(prod.entries);
      RatVec w = mat_vec(C.ops[a].matrix, C.ops[b].translation);
      std::vector<Int> v(n);
      for (int i = 0; i < n; ++i) {
        w[i] += C.ops[a].translation[i];
        Rational diff = w[i] - C.ops[c].translation[i];
        if (denominator(diff) != 1) throw std::logic_error("vector system cocycle not integral");
        v[i] = numerator(diff);
      }
      // g_a g_b = e^v g_c, with the g_c factor absent when c is the identity.
      Word rel{op_letter[a], op_letter[b]};
      if (c != id) rel.push_back(-op_letter[c]);
      Word back = inverse_word(translation_word(v));
      rel.insert(rel.end(), back.begin(), back.end());
      relators.push_back(std::move(rel));
    }
  }
  return Presentation(names, relators);
}

namespace {

AffineElement evaluate_word(const CrystalGroup& C, const Word& w) {
  int n = C.dim;
  std::size_t id = identity_op(C);
  // Letters 1..n are unit translations; letters beyond map to non-identity
  // ops in list order, matching crystal_presentation.
  std::vector<std::size_t> op_of_letter;
  for (std::size_t k = 0; k < C.ops.size(); ++k)
    if (k != id) op_of_letter.push_back(k);

  AffineElement acc = affine_identity(n);
  for (Letter x : w) {
    int a = std::abs(x);
    AffineElement step = affine_identity(n);
    if (a <= n) {
      step.t[a - 1] = 1;
    } else {
      std::size_t idx = static_cast<std::size_t>(a - n - 1);
      if (idx >= op_of_letter.size()) throw std::invalid_argument("word letter out of range");
      step = op_element(C, op_of_letter[idx]);
    }
    if (x < 0) step = affine_inverse(step);
    acc = affine_mul(acc, step);
  }
  return acc;
}

// Elements of Gamma / M Z^n: (op k, residue z) with translation t_k + z.
struct FiniteQuotient {
  const CrystalGroup& C;
  long long M;
  int n;
  long long total;  // ops * M^n

  FiniteQuotient(const CrystalGroup& C_, long long M_) : C(C_), M(M_), n(C_.dim) {
    long long cells = 1;
    for (int i = 0; i < n; ++i) {
      cells *= M;
      if (cells > 5000000) throw CapExceeded("crystal quotient too large");
    }
    total = cells * static_cast<long long>(C.ops.size());
    if (total > 5000000) throw CapExceeded("crystal quotient too large");
  }

  long long encode(std::size_t op, const std::vector<long long>& z) const {
    long long id = static_cast<long long>(op);
    for (int i = 0; i < n; ++i) id = id * M + z[i];
    return id;
  }

  std::pair<std::size_t, std::vector<long long>> decode(long long id) const {
    std::vector<long long> z(n);
    for (int i = n - 1; i >= 0; --i) {
      z[i] = id % M;
      id /= M;
    }
    return {static_cast<std::size_t>(id), z};
  }

  // (S_a, t_a + z1)(S_b, t_b + z2) = (S_c, t_c + v + z1 + S_a z2).
  long long mul(long long x, long long y) const {
    auto [a, z1] = decode(x);
    auto [b, z2] = decode(y);
    IntegerMatrix prod = matmul(C.ops[a].matrix, C.ops[b].matrix);
    std::size_t c = 0;
    bool found = false;
    for (std::size_t k = 0; k < C.ops.size(); ++k)
      if (C.ops[k].matrix == prod) {
        c = k;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("ops not closed in quotient arithmetic");
    RatVec w = mat_vec(C.ops[a].matrix, C.ops[b].translation);
    std::vector<long long> z(n);
    for (int i = 0; i < n; ++i) {
      w[i] += C.ops[a].translation[i];
      Rational diff = w[i] - C.ops[c].translation[i];
      if (denominator(diff) != 1) throw std::logic_error("cocycle not integral in quotient");
      Int zi = numerator(diff) + z1[i];
      for (int j = 0; j < n; ++j) zi += C.ops[a].matrix.at(i, j) * z2[j];
      Int m = zi % M;
      if (m < 0) m += M;
      z[i] = m.convert_to<long long>();
    }
    return encode(c, z);
  }
};

long long smallest_prime_factor(long long v) {
  for (long long p = 2; p * p <= v; ++p)
    if (v % p == 0) return p;
  return v;
}

}  // namespace

CrystalWitness euclidean_witness(const CrystalGroup& C) {
  C.validate();
  if (is_free_abelian(C))
    throw std::invalid_argument("crystal group is free abelian: it has no such witness");
  int n = C.dim;
  std::size_t id = identity_op(C);

  long long point_order = C.ops.size();
  long long p = smallest_prime_factor(point_order);

  std::size_t sigma = C.ops.size();
  for (std::size_t k = 0; k < C.ops.size(); ++k) {
    if (k == id) continue;
    if (matrix_order(C.ops[k].matrix) == p) {
      sigma = k;
      break;
    }
  }
  if (sigma == C.ops.size())
    throw std::logic_error("no point group element of prime order found");
  const IntegerMatrix& S = C.ops[sigma].matrix;

  // Fixed lattice T n E and its gram-orthogonal complement lattice.
  IntegerMatrix fixed = integer_kernel(mat_sub(S, identity_matrix(n)));  // n x f
  IntegerMatrix perp = integer_kernel(matmul(transpose(fixed), C.gram));  // n x r
  int f = fixed.cols, r = perp.cols;
  if (f + r != n) throw std::logic_error("fixed space and complement do not span");
  if (r == 0) throw std::logic_error("prime-order element fixes the whole lattice");

  // omega = sum of S^i over i < p must equal p times the projection onto the
  // fixed space; this pins both the kernel computation and the op data.
  IntegerMatrix omega(n, n);
  {
    IntegerMatrix acc = identity_matrix(n);
    for (long long i = 0; i < p; ++i) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) omega.at(a, b) += acc.at(a, b);
      acc = matmul(acc, S);
    }
    RatMat proj(n, RatVec(n, Rational(0)));
    if (f > 0) {
      IntegerMatrix bgb = matmul(matmul(transpose(fixed), C.gram), fixed);  // f x f
      RatMat inv(f, RatVec(f));
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) inv[i][j] = Rational(bgb.at(i, j));
      inv = rat_inverse(std::move(inv));
      IntegerMatrix bg = matmul(transpose(fixed), C.gram);  // f x n
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j)
              proj[a][b] += Rational(fixed.at(a, i)) * inv[i][j] * Rational(bg.at(j, b));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (Rational(omega.at(a, b)) != Rational(p) * proj[a][b])
          throw std::logic_error("trace map does not match the fixed-space projection");
  }

  // gamma^p is a translation in the fixed lattice.
  AffineElement gamma = op_element(C, sigma);
  {
    AffineElement acc = affine_identity(n);
    for (long long i = 0; i < p; ++i) acc = affine_mul(acc, gamma);
    if (!is_identity(acc.S)) throw std::logic_error("sigma does not have order p");
    RatVec u = acc.t;
    for (const Rational& x : u)
      if (denominator(x) != 1) throw std::logic_error("gamma^p is not a lattice translation");
    if (f == 0) {
      for (const Rational& x : u)
        if (x != 0) throw std::logic_error("gamma^p must vanish when nothing is fixed");
    } else if (!rat_solve(fixed, u)) {
      throw std::logic_error("gamma^p does not lie in the fixed lattice");
    }
  }

  // W = [fixed | p*perp] spans T'' of index M = |det W| in Z^n.
  IntegerMatrix W(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < f; ++j) W.at(i, j) = fixed.at(i, j);
    for (int j = 0; j < r; ++j) W.at(i, f + j) = Int(p) * perp.at(i, j);
  }
  Int detw = determinant(W);
  if (detw == 0) throw std::logic_error("sublattice basis is singular");
  Int M_int = detw < 0 ? -detw : detw;
  long long M = M_int.convert_to<long long>();

  // Count cosets of B = <gamma, T''> in the finite quotient Gamma / M Z^n.
  FiniteQuotient Q(C, M);
  std::vector<long long> gens;
  {
    std::vector<long long> zero(n, 0);
    gens.push_back(Q.encode(sigma, zero));
    for (int j = 0; j < n; ++j) {
      std::vector<long long> z(n);
      for (int i = 0; i < n; ++i) {
        Int m = W.at(i, j) % M;
        if (m < 0) m += M;
        z[i] = m.convert_to<long long>();
      }
      gens.push_back(Q.encode(id, z));
    }
  }
  long long subgroup_size = 0;
  {
    std::set<long long> seen;
    std::vector<long long> queue{Q.encode(id, std::vector<long long>(n, 0))};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (long long g : gens) {
        long long x = Q.mul(queue[head], g);
        if (seen.insert(x).second) queue.push_back(x);
      }
    subgroup_size = static_cast<long long>(seen.size());
  }
  if (Q.total % subgroup_size != 0) throw std::logic_error("subgroup size does not divide quotient");
  long long index = Q.total / subgroup_size;
  if (index != (point_order / p) * M)
    throw std::logic_error("coset count disagrees with the index formula");
  if (index % point_order != 0)
    throw std::logic_error("index is not a multiple of the point group order");
  long long N = index / point_order;

  CrystalWitness w;
  w.index = index;
  w.prime = p;
  w.presentation = crystal_presentation(C);

  // L = the lattice spanned by e1..e_{n-1}, e_n^N has the same index.
  for (int i = 1; i < n; ++i) w.abelian_generators.push_back(Word{static_cast<Letter>(i)});
  if (N > 1000000) throw CapExceeded("abelian sublattice index too large");
  w.abelian_generators.push_back(word_power(Word{static_cast<Letter>(n)}, static_cast<int>(N)));

  // Letter of sigma in the presentation: count non-identity ops before it.
  Letter gamma_letter = 0;
  {
    int at = n;
    for (std::size_t k = 0; k < C.ops.size(); ++k) {
      if (k == id) continue;
      ++at;
      if (k == sigma) {
        gamma_letter = at;
        break;
      }
    }
  }
  w.nonabelian_generators.push_back(Word{gamma_letter});
  for (int j = 0; j < n; ++j) {
    std::vector<Int> col(n);
    for (int i = 0; i < n; ++i) col[i] = W.at(i, j);
    w.nonabelian_generators.push_back(translation_word(col));
  }

  // Certificate: gamma against the first basis translation it moves.
  Word moved;
  for (int j = 0; j < n && moved.empty(); ++j) {
    std::vector<Int> col(n);
    for (int i = 0; i < n; ++i) col[i] = W.at(i, j);
    if (mat_vec_int(S, col) != col) moved = translation_word(col);
  }
  if (moved.empty()) throw std::logic_error("no translation moved by gamma");
  w.commutator_pair = {Word{gamma_letter}, moved};

  if (!verify_pair(C, w)) throw std::logic_error("constructed witness failed verification");
  return w;
}

bool verify_pair(const CrystalGroup& C, const CrystalWitness& w) {
  C.validate();
  Presentation P = crystal_presentation(C);
  if (P.generator_names != w.presentation.generator_names ||
      P.relators != w.presentation.relators)
    return false;
  if (w.index < 1) return false;

  int cap = static_cast<int>(std::min<long long>(w.index * 4 + 16, 1000000));
  try {
    if (coset_enumeration(P, w.abelian_generators, cap).index != w.index) return false;
    if (coset_enumeration(P, w.nonabelian_generators, cap).index != w.index) return false;
  } catch (const CapExceeded&) {
    return false;
  }

  std::vector<AffineElement> abelian;
  for (const Word& word : w.abelian_generators) abelian.push_back(evaluate_word(C, word));
  for (std::size_t i = 0; i < abelian.size(); ++i)
    for (std::size_t j = i + 1; j < abelian.size(); ++j)
      if (!affine_eq(affine_mul(abelian[i], abelian[j]), affine_mul(abelian[j], abelian[i])))
        return false;

  auto is_generator = [&](const Word& word) {
    for (const Word& g : w.nonabelian_generators)
      if (g == word) return true;
    return false;
  };
  if (!is_generator(w.commutator_pair.first) || !is_generator(w.commutator_pair.second))
    return false;
  AffineElement u = evaluate_word(C, w.commutator_pair.first);
  AffineElement v = evaluate_word(C, w.commutator_pair.second);
  AffineElement comm = affine_mul(affine_mul(u, v),
                                  affine_mul(affine_inverse(u), affine_inverse(v)));
  if (affine_eq(comm, affine_identity(C.dim))) return false;
  return true;
}

}  // namespace census
