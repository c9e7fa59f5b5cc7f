#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "census/homology.hpp"
#include "census/lowindex.hpp"
#include "census/presentations.hpp"

namespace census {

// Coset enumeration outgrew its cap; the group (or index) may be infinite.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ToddCoxeterResult {
  int index = 0;
  CosetTable table;  // canonical action on the subgroup's cosets
};

// HLT coset enumeration with immediate deductions, coincidence handling and
// final compaction, relative to the subgroup generated by the given words.
// Throws CapExceeded once more than `cap` cosets are alive at any point.
ToddCoxeterResult coset_enumeration(const Presentation& P, const std::vector<Word>& subgroup,
                                    int cap = 2000);

// Multiplication table of a finite group, elements indexed 0..order-1 with
// identity 0. Element i corresponds to coset i+1 of the trivial subgroup.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;      // table[a * order + b] = a*b
  std::vector<int> inverse;    // inverse[a]
  std::vector<int> generators; // images of the presentation's generators, if built from one

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int power(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  std::vector<int> center() const;          // sorted element indices
  std::vector<int> derived_subgroup() const;
};

// Multiplication table of the group presented by P; throws CapExceeded when
// the enumeration cannot finish within the cap (in particular for infinite
// groups).
FiniteGroup realize(const Presentation& P, int cap = 2000);

struct Subgroup {
  std::vector<int> elements;  // sorted, always containing 0
  int order() const { return static_cast<int>(elements.size()); }
  bool operator==(const Subgroup&) const = default;
  bool operator<(const Subgroup& o) const;
};

Subgroup closure(const FiniteGroup& G, const std::vector<int>& seed);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int g);
bool is_normal_subgroup(const FiniteGroup& G, const Subgroup& H);

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;                      // all of them, sorted by (order, elements)
  std::vector<std::vector<std::size_t>> classes;        // conjugacy classes, by subgroup index
};

// Every subgroup of G, found bottom-up by closing cyclic subgroups against
// each other. Throws CapExceeded if more than `count_cap` distinct subgroups
// appear.
SubgroupLattice all_subgroups(const FiniteGroup& G, std::size_t count_cap = 200000);

// Abstract group on a subgroup's elements with its induced multiplication.
FiniteGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

// Isomorphism-invariant summary; equal fingerprints are a prerequisite for
// isomorphism and distinguish all groups this library needs to separate.
struct GroupFingerprint {
  long long order = 0;
  bool abelian = false;
  std::vector<std::pair<int, int>> order_histogram;  // (element order, count), sorted
  int center_order = 0;
  int derived_order = 0;
  std::vector<long long> abelian_invariants;  // of G/[G,G], largest factor first

  bool operator==(const GroupFingerprint&) const = default;
  bool operator<(const GroupFingerprint& o) const;
  std::string str() const;
};

GroupFingerprint fingerprint(const FiniteGroup& G);

// Exact isomorphism test: fingerprint screen, then backtracking over
// generator images.
bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B);

FiniteGroup cyclic_group(int n);

// G x Z/q for gcd(|G|, q) = 1; q = 1 returns G itself.
FiniteGroup coprime_product(const FiniteGroup& G, long long q);

// Multiplication table of a catalog group; checks the result against the
// catalog order.
FiniteGroup spherical_group(const SphericalKind& kind, int cap = 2000);

struct LensSpace {
  long long p = 1;
  long long q = 0;
  LensSpace() = default;
  LensSpace(long long p_, long long q_);  // validates gcd(p, q) = 1, reduces q mod p
  bool operator==(const LensSpace&) const = default;
  std::string str() const;
};

// L(p, q) and L(p, q') are homeomorphic iff q' = +-q^{+-1} mod p. Throws
// std::invalid_argument when the p's differ.
bool lens_homeomorphic(const LensSpace& a, const LensSpace& b);

// True iff all L(p, *) are pairwise homeomorphic, i.e. every unit is +-1
// mod p; holds exactly for p in {1, 2, 3, 4, 6}.
bool unique_lens_order(long long p);

enum class Verdict { Exceptional, NotExceptional, Undetermined };

std::string verdict_name(Verdict v);

// Two same-index subgroups that are not isomorphic, by lattice index and
// element list, with their fingerprints.
struct SubgroupWitness {
  int index = 0;
  std::vector<int> elements_a, elements_b;
  std::string fingerprint_a, fingerprint_b;
};

struct IsoClassEntry {
  std::string fingerprint;
  int count = 0;            // subgroups in this class at this index
  bool cyclic = false;
  bool all_conjugate = false;
  long long subgroup_order = 0;
};

struct IndexEntry {
  int index = 0;
  std::vector<IsoClassEntry> iso_classes;
};

struct ExceptionalityReport {
  Verdict verdict = Verdict::Undetermined;
  std::vector<IndexEntry> by_index;           // ascending index > 1
  std::optional<SubgroupWitness> witness;     // present iff NotExceptional
  std::string reason;
};

// Do all same-index subgroups of G lift to a single homeomorphism type of
// cover? NotExceptional comes with a witness pair; Exceptional requires all
// same-index subgroups isomorphic and every class of cyclic subgroups to be
// conjugate, unique at its index, or of an order whose lens spaces are all
// homeomorphic; a central coprime cyclic factor is split off and the
// complement decided recursively before giving up.
ExceptionalityReport exceptionality_report(const FiniteGroup& G, std::size_t count_cap = 200000);

}  // namespace census
