#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "census/homology.hpp"
#include "census/lowindex.hpp"
#include "census/signature.hpp"

namespace census {

// chi(genus g, k cone points of orders m_i, cusps) = -(2g - 2 + k + sum(1 - 1/m_i)).
Rational orbifold_euler(const Signature& sig);

// Groups with these signatures are isomorphic iff the period multisets match
// and either both are cocompact with equal genus or both have cusps with
// equal 2g + k.
bool fuchsian_isomorphic(const Signature& a, const Signature& b);

// Signature of the point-1 stabilizer: each c-cycle of the i-th torsion
// generator contributes a period m_i/c when that ratio exceeds 1, each cycle
// of a cusp generator contributes a cusp, and the genus comes from
// multiplicativity of the Euler characteristic. Throws std::logic_error if
// the table is inconsistent with the signature.
Signature subgroup_signature(const Signature& root, const CosetTable& t);

// Number of subgroup conjugacy classes of elements of order exactly m >= 2:
// the (m_i/m)-cycles of the i-th torsion generator, summed over i with
// m | m_i.
long long torsion_class_count(const Signature& root, const CosetTable& t, int m);

// Number of isomorphism classes of index-n subgroups of the group with the
// given signature.
std::uint64_t e_n_fuchsian(const Signature& root, int n, const EnumerationOptions& opt = {});

// Number of signatures with Euler characteristic n * chi(root) whose periods
// divide periods of root: tuples (r, (k_m)) with
// r + sum (1 - 1/m) k_m = -n * chi(root), where r runs over the values
// 2g' - 2 + k' a cover can realize (any integer >= -1 when root has a cusp,
// even integers >= -2 when cocompact). Exact count of isomorphism classes
// when root has a cusp; an upper bound otherwise.
std::uint64_t lattice_point_count(const Signature& root, int n);

// Number of multisets over the given part set summing to n.
Int partition_count(const std::vector<int>& parts, int n);

}  // namespace census
