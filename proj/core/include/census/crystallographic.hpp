#pragma once

#include <string>
#include <utility>
#include <vector>

#include "census/homology.hpp"
#include "census/presentations.hpp"

namespace census {

// Affine isometry x -> Sx + t with integral linear part and rational
// translation, taken mod Z^n as a vector-system entry.
struct CrystalOp {
  IntegerMatrix matrix;               // n x n, orthogonal for the gram form
  std::vector<Rational> translation;  // entries reduced into [0, 1)
};

// Bieberbach data: translation lattice Z^n carrying a gram form, plus one
// vector-system entry per point group element (identity included, with zero
// translation).
struct CrystalGroup {
  int dim = 0;
  IntegerMatrix gram;
  std::vector<CrystalOp> ops;

  // Gram positive definite; ops closed under composition mod Z^n with
  // distinct matrices preserving the form; identity entry present. Throws
  // std::invalid_argument on violation.
  void validate() const;
  int point_group_order() const { return static_cast<int>(ops.size()); }
};

bool is_free_abelian(const CrystalGroup& C);

// Same-index pair of finite covers: B nonabelian (it contains gamma and a
// translation it moves), L free abelian of matching index.
struct CrystalWitness {
  long long index = 0;
  Presentation presentation;            // of the whole crystal group
  std::vector<Word> abelian_generators;     // generate L
  std::vector<Word> nonabelian_generators;  // generate B
  std::pair<Word, Word> commutator_pair;    // two B-generators that do not commute
  long long prime = 0;                      // prime used in the construction
};

// Presentation on translation generators e1..en and one generator per
// non-identity point group element, with commutation, action, and product
// relators.
Presentation crystal_presentation(const CrystalGroup& C);

// For a non-free-abelian crystal group: pick a prime-order point group
// element sigma with fixed space E, set B = <gamma, (T n E) + p (T n E^perp)>
// and L a sublattice of T of the same index. The index is computed by coset
// counting in the finite quotient by a scaled lattice. Throws
// std::invalid_argument when the group is free abelian.
CrystalWitness euclidean_witness(const CrystalGroup& C);

// Re-derives both subgroup indices by coset enumeration over the crystal
// presentation, checks L's generators commute and B's certificate pair does
// not, evaluating words as affine isometries.
bool verify_pair(const CrystalGroup& C, const CrystalWitness& w);

}  // namespace census
