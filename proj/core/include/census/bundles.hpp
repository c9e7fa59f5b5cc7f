#pragma once

#include <cstdint>
#include <string>

#include "census/homology.hpp"

namespace census {

// Orientable circle bundle over the closed orientable surface of the given
// genus, classified by its Euler number.
struct CircleBundle {
  int genus = 0;
  long long euler = 0;
  bool operator==(const CircleBundle&) const = default;
  std::string str() const;
};

// Euler number of a fiberwise cover: degree ell along the base, degree m
// along the fiber, defined only when m divides ell * e.
long long cover_euler(long long e, long long ell, long long m);

// H_1 = Z^{2g} + Z/e, with the conventions Z^{2g+1} for e = 0 and Z^{2g}
// for |e| = 1.
AbelianGroup h1_circle_bundle(const CircleBundle& b);

// A fiberwise cover of b: ell-fold along the base, m-fold along the fiber.
struct BundleCover {
  CircleBundle total;
  long long base_degree = 1;   // ell
  long long fiber_degree = 1;  // m
  long long degree() const { return base_degree * fiber_degree; }
};

struct CircleBundleWitness {
  bool has_witness = false;
  long long degree = 0;  // common degree of the two covers
  BundleCover cover_a, cover_b;
  AbelianGroup h1_a, h1_b;
  std::string reason;  // set when no witness exists
};

// Two same-degree covers of b with different first homology, preferring the
// requested degree d and falling back to a degree where a pair exists; the
// only bundle with no such pair at any degree is the 3-torus (g, e) = (1, 0).
// Requires g >= 1.
CircleBundleWitness circle_bundle_witness(const CircleBundle& b, long long d);

// Torus bundle with Anosov monodromy in SL(2, Z).
struct SolBundle {
  long long a = 2, b = 1, c = 1, d = 1;
  long long trace() const { return a + d; }
  void validate() const;  // determinant 1, |trace| > 2
  std::string str() const;
};

// Trace of the d-th power of the monodromy matrix, computed by exact matrix
// powering.
Int monodromy_power_trace(const SolBundle& s, long long d);

// The fiberwise degree-d cover of a Sol torus bundle has monodromy A^d; the
// pair of traces distinguishes cover from base.
struct SolWitness {
  long long degree = 0;
  Int base_trace;
  Int power_trace;
};

SolWitness sol_witness(const SolBundle& s, long long d);

}  // namespace census
