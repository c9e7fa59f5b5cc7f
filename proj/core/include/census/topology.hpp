#pragma once

#include <optional>
#include <string>
#include <vector>

#include "census/bundles.hpp"
#include "census/finitegroups.hpp"
#include "census/presentations.hpp"

namespace census {

// Compact surface: genus counts handles (orientable) or crosscaps
// (non-orientable, genus >= 1).
struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int boundary = 0;
  int euler() const;
  std::string str() const;
};

// True iff all same-degree finite covers of the surface are homeomorphic:
// the disk, the annulus, the Moebius band, the projective plane, and every
// closed orientable surface.
bool surface_exceptional(const SurfaceType& S);

// For a planar surface with k >= 3 boundary circles: two surjections to Z/k
// whose degree-k cyclic covers have different boundary counts. Boundary i
// covers by gcd(k, phi(a_i)) circles.
struct SurfaceWitness {
  int k = 0;
  std::vector<long long> phi_values, psi_values;          // images of the boundary classes
  std::vector<long long> phi_boundaries, psi_boundaries;  // circles above each boundary
  long long phi_total = 0, psi_total = 0;
};

SurfaceWitness surface_cover_witness(int k);

// Degree-d cover of a connected sum of k summands, with summand j covered by
// i_j pieces and ell extra sphere summands: checks (k-1) d = sum i_j - 1 + ell.
bool consum_cover_check(int k, long long d, const std::vector<long long>& pieces, long long ell);

// Summand count of the degree-d cover of k copies of the twisted or untwisted
// 2-sphere bundle over the circle: (k-1) d + 1.
long long sphere_sum_cover(int k, long long d);

struct PrimeSummand {
  enum class Tag {
    S1xS2,       // orientable 2-sphere bundle over the circle
    S1xtwS2,     // twisted 2-sphere bundle over the circle
    Lens,        // L(p, q), includes S^3 for p = 1
    Spherical,   // closed quotient with catalog fundamental group
    SeifertBundle,  // orientable circle bundle over a closed orientable surface
    Sol,         // torus bundle with Anosov monodromy
    T3,          // 3-torus
    T2xI,        // torus times interval
    S1xD2,       // solid torus
    Other        // opaque label, optionally with a known exceptionality flag
  };

  Tag tag = Tag::S1xS2;
  LensSpace lens;
  SphericalKind kind;
  CircleBundle bundle;
  SolBundle sol;
  std::string label;
  std::optional<bool> flagged_exceptional;

  std::string str() const;
  static PrimeSummand parse(const std::string& text);
};

struct ManifoldDescriptor {
  std::vector<PrimeSummand> summands;
  std::string str() const;
  static ManifoldDescriptor parse(const std::string& text);
  void validate() const;  // nonempty; no trivial group in sums; no mixed orientability
};

struct SumCoverWitness {
  long long degree = 0;
  std::string cover_a, cover_b;
  int k = 0;
  std::vector<long long> pieces_a, pieces_b;  // summand piece counts, checked
  long long spheres_a = 0, spheres_b = 0;
  std::string distinguisher;
};

struct VerdictWitness {
  std::string kind;  // subgroup_pair | bundle_pair | sol_traces | sum_covers | none
  std::optional<SubgroupWitness> subgroups;
  std::optional<CircleBundleWitness> bundles;
  std::optional<SolWitness> sol;
  std::optional<SumCoverWitness> covers;
  std::string note;
};

struct VerdictReport {
  Verdict verdict = Verdict::Undetermined;
  std::string manifold;
  std::string reason;
  std::optional<VerdictWitness> witness;
};

struct VerdictOptions {
  int group_cap = 2000;
  std::size_t subgroup_cap = 200000;
};

// Decide whether every pair of same-degree finite covers of the manifold is
// homeomorphic, with an explicit distinguishing pair when not.
VerdictReport manifold_verdict(const ManifoldDescriptor& M, const VerdictOptions& opt = {});

}  // namespace census
