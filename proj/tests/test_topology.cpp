#include "doctest.h"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "census/topology.hpp"
#include "oracles.hpp"

using namespace census;

TEST_CASE("surface Euler characteristics") {
  CHECK(SurfaceType{true, 0, 0}.euler() == 2);   // sphere
  CHECK(SurfaceType{true, 1, 0}.euler() == 0);   // torus
  CHECK(SurfaceType{true, 2, 0}.euler() == -2);
  CHECK(SurfaceType{true, 0, 1}.euler() == 1);   // disk
  CHECK(SurfaceType{true, 0, 3}.euler() == -1);  // pair of pants
  CHECK(SurfaceType{false, 1, 0}.euler() == 1);  // projective plane
  CHECK(SurfaceType{false, 2, 0}.euler() == 0);  // Klein bottle
  CHECK(SurfaceType{false, 1, 1}.euler() == 0);  // Moebius band
  CHECK_THROWS_AS((SurfaceType{false, 0, 0}.euler()), std::invalid_argument);
  CHECK_THROWS_AS((SurfaceType{true, -1, 0}.euler()), std::invalid_argument);
}

TEST_CASE("exceptional surfaces are exactly the classical list") {
  CHECK(surface_exceptional({true, 0, 0}));    // sphere
  CHECK(surface_exceptional({true, 5, 0}));    // any closed orientable surface
  CHECK(surface_exceptional({true, 0, 1}));    // disk
  CHECK(surface_exceptional({true, 0, 2}));    // annulus
  CHECK(surface_exceptional({false, 1, 0}));   // projective plane
  CHECK(surface_exceptional({false, 1, 1}));   // Moebius band
  CHECK_FALSE(surface_exceptional({true, 0, 3}));   // pair of pants
  CHECK_FALSE(surface_exceptional({true, 1, 1}));   // one-holed torus
  CHECK_FALSE(surface_exceptional({false, 2, 0}));  // Klein bottle
  CHECK_FALSE(surface_exceptional({false, 1, 2}));
}

TEST_CASE("planar surface witnesses distinguish cyclic covers") {
  for (int k = 3; k <= 8; ++k) {
    SurfaceWitness w = surface_cover_witness(k);
    CHECK(w.k == k);
    REQUIRE(w.phi_values.size() == static_cast<std::size_t>(k));
    REQUIRE(w.psi_values.size() == static_cast<std::size_t>(k));
    // Surjections onto Z/k: boundary images sum to 0 and generate.
    long long phi_sum = std::accumulate(w.phi_values.begin(), w.phi_values.end(), 0LL);
    long long psi_sum = std::accumulate(w.psi_values.begin(), w.psi_values.end(), 0LL);
    CHECK(phi_sum % k == 0);
    CHECK(psi_sum % k == 0);

    long long phi_total = 0, psi_total = 0;
    for (int i = 0; i < k; ++i) {
      CHECK(w.phi_boundaries[i] == std::gcd(static_cast<long long>(k), w.phi_values[i]));
      CHECK(w.psi_boundaries[i] == std::gcd(static_cast<long long>(k), w.psi_values[i]));
      phi_total += w.phi_boundaries[i];
      psi_total += w.psi_boundaries[i];
    }
    CHECK(w.phi_total == phi_total);
    CHECK(w.psi_total == psi_total);
    CHECK(w.phi_total != w.psi_total);
  }
  CHECK_THROWS_AS(surface_cover_witness(2), std::invalid_argument);
}

TEST_CASE("witness boundary counts match explicit permutation covers") {
  // Realize the cyclic cover as the permutation x -> x + a on Z/k and count
  // boundary circles upstairs as orbits, independently of the gcd formula.
  for (int k = 3; k <= 8; ++k) {
    SurfaceWitness w = surface_cover_witness(k);
    long long phi_total = 0, psi_total = 0;
    for (int i = 0; i < k; ++i) {
      phi_total += oracle::cycle_count_mod(k, w.phi_values[i]);
      psi_total += oracle::cycle_count_mod(k, w.psi_values[i]);
    }
    CHECK(w.phi_total == phi_total);
    CHECK(w.psi_total == psi_total);
  }
}

TEST_CASE("connected sum cover accounting") {
  // Degree-5 cover of a 3-summand sum: (3-1)*5 = 10 = sum - 1 + ell.
  CHECK(consum_cover_check(3, 5, {1, 5, 5}, 0));
  CHECK(consum_cover_check(3, 5, {1, 5, 1}, 4));
  CHECK_FALSE(consum_cover_check(3, 5, {1, 5, 1}, 0));
  CHECK(consum_cover_check(2, 3, {3, 1}, 0));
  CHECK(consum_cover_check(1, 7, {1}, 0));  // prime manifold, connected cover
  CHECK_FALSE(consum_cover_check(2, 2, {2, 2}, 0));  // 2 != 3
  CHECK_THROWS_AS(consum_cover_check(2, 2, {2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(consum_cover_check(0, 2, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(consum_cover_check(2, 2, {0, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(consum_cover_check(2, 2, {2, 1}, -1), std::invalid_argument);
}

TEST_CASE("sphere bundle sums have linear cover growth") {
  CHECK(sphere_sum_cover(1, 5) == 1);
  CHECK(sphere_sum_cover(2, 1) == 2);
  CHECK(sphere_sum_cover(2, 5) == 6);
  CHECK(sphere_sum_cover(3, 4) == 9);
  CHECK_THROWS_AS(sphere_sum_cover(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sphere_sum_cover(2, 0), std::invalid_argument);
}

TEST_CASE("prime summand text round trips") {
  for (const char* text :
       {"S1xS2", "S1x~S2", "T3", "T2xI", "S1xD2", "L(5,2)", "L(1,0)", "sph:Q8n:2",
        "sph:P48xZ:5", "bundle:2,-3", "sol:2,1,1,1", "other:mystery",
        "other:thing=exceptional", "other:thing=not_exceptional"}) {
    PrimeSummand s = PrimeSummand::parse(text);
    CHECK(s.str() == text);
    CHECK(PrimeSummand::parse(s.str()).str() == text);
  }
  CHECK(PrimeSummand::parse("L(7,9)").str() == "L(7,2)");  // q reduces mod p
  CHECK_THROWS_AS(PrimeSummand::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSummand::parse("L(4,2)"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSummand::parse("sph:Q8n:1xZ:2"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSummand::parse("sol:1,0,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSummand::parse("wat:1"), std::invalid_argument);
}

TEST_CASE("genus-0 bundles must be written as lens spaces") {
  CHECK_THROWS_AS(PrimeSummand::parse("bundle:0,1"), std::invalid_argument);
  CHECK_THROWS_AS(PrimeSummand::parse("bundle:0,0"), std::invalid_argument);
  CHECK(PrimeSummand::parse("bundle:1,0").tag == PrimeSummand::Tag::SeifertBundle);
}

TEST_CASE("manifold descriptor parsing and validation") {
  ManifoldDescriptor M = ManifoldDescriptor::parse("S1xS2 # S1xS2 # L(5,1)");
  CHECK(M.summands.size() == 3);
  CHECK(M.str() == "S1xS2 # S1xS2 # L(5,1)");
  ManifoldDescriptor::parse("T3").validate();
  ManifoldDescriptor::parse("L(7,2)").validate();

  CHECK_THROWS_AS(ManifoldDescriptor::parse(""), std::invalid_argument);
  // Boundary and trivial-group summands cannot appear in nontrivial sums.
  CHECK_THROWS_AS(ManifoldDescriptor::parse("T2xI # L(5,1)").validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(ManifoldDescriptor::parse("S1xD2 # T3").validate(), std::invalid_argument);
  CHECK_THROWS_AS(ManifoldDescriptor::parse("L(1,0) # T3").validate(), std::invalid_argument);
  CHECK_THROWS_AS(ManifoldDescriptor::parse("sph:trivial # T3").validate(),
                  std::invalid_argument);
  // Orientable and non-orientable sphere bundles do not mix.
  CHECK_THROWS_AS(ManifoldDescriptor::parse("S1xS2 # S1x~S2").validate(),
                  std::invalid_argument);
}

TEST_CASE("verdicts for the exceptional list") {
  for (const char* text : {"S1xS2", "S1x~S2", "S1xD2", "T2xI", "T3", "L(5,1)", "L(12,5)",
                           "sph:Q8n:1", "sph:P120", "sph:Q8n:1xZ:3", "sph:D:2,1",
                           "sph:Pp:1", "bundle:1,0", "S1xS2 # S1xS2"}) {
    VerdictReport r = manifold_verdict(ManifoldDescriptor::parse(text));
    CHECK(r.verdict == Verdict::Exceptional);
    CHECK_FALSE(r.reason.empty());
    CHECK(r.manifold == ManifoldDescriptor::parse(text).str());
  }
}

TEST_CASE("verdicts for the non-exceptional list") {
  for (const char* text :
       {"sph:Q8n:2", "sph:Q8n:3", "sph:P48", "sph:Q8n:2xZ:3", "sph:P48xZ:5",
        "bundle:1,1", "bundle:2,0", "bundle:2,3", "sol:2,1,1,1", "sol:3,1,2,1",
        "S1xS2 # S1xS2 # L(5,1)", "L(7,1) # L(7,1)", "sph:Q8n:2 # S1xS2",
        "S1x~S2 # S1x~S2 # S1x~S2"}) {
    VerdictReport r = manifold_verdict(ManifoldDescriptor::parse(text));
    CHECK(r.verdict == Verdict::NotExceptional);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind != "");
  }
}

TEST_CASE("witness kinds match the summand geometry") {
  CHECK(manifold_verdict(ManifoldDescriptor::parse("sph:P48")).witness->kind ==
        "subgroup_pair");
  CHECK(manifold_verdict(ManifoldDescriptor::parse("bundle:2,3")).witness->kind ==
        "bundle_pair");
  CHECK(manifold_verdict(ManifoldDescriptor::parse("sol:2,1,1,1")).witness->kind ==
        "sol_traces");
  CHECK(manifold_verdict(ManifoldDescriptor::parse("S1xS2 # L(7,1)")).witness->kind ==
        "sum_covers");
}

TEST_CASE("sum witness satisfies the cover accounting identity") {
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("S1xS2 # S1xS2 # L(5,1)"));
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->covers.has_value());
  const SumCoverWitness& w = *r.witness->covers;
  CHECK(w.k == 3);
  CHECK(w.degree == 5);
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_a, w.spheres_a));
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_b, w.spheres_b));
  // Pieces plus sphere summands always total d(k-1)+1, so the covers are told
  // apart by how that total splits, not by its size.
  long long total_a = std::accumulate(w.pieces_a.begin(), w.pieces_a.end(), w.spheres_a);
  long long total_b = std::accumulate(w.pieces_b.begin(), w.pieces_b.end(), w.spheres_b);
  CHECK(total_a == w.degree * (w.k - 1) + 1);
  CHECK(total_b == w.degree * (w.k - 1) + 1);
  CHECK((w.pieces_a != w.pieces_b || w.spheres_a != w.spheres_b));
  CHECK_FALSE(w.distinguisher.empty());
}

TEST_CASE("all-exceptional sums still produce a distinguishing pair") {
  // Two lens spaces: both exceptional alone, not exceptional as a sum. The
  // coprime orders rule out a shared cover degree, so the witness comes from
  // regular orbits at degree p + q - 1.
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("L(5,1) # L(7,1)"));
  CHECK(r.verdict == Verdict::NotExceptional);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->covers.has_value());
  const SumCoverWitness& w = *r.witness->covers;
  CHECK(w.k == 2);
  CHECK(w.degree == 11);
  CHECK(w.pieces_a == std::vector<long long>{7, 5});
  CHECK(w.pieces_b == std::vector<long long>{3, 5});
  CHECK(w.spheres_a == 0);
  CHECK(w.spheres_b == 4);
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_a, w.spheres_a));
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_b, w.spheres_b));
}

TEST_CASE("spherical sums with coprime orders get regular-orbit covers") {
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("sph:Q8n:1 # sph:P120"));
  CHECK(r.verdict == Verdict::NotExceptional);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->covers.has_value());
  const SumCoverWitness& w = *r.witness->covers;
  // |Q8| = 8 and |P120| = 120 share no cover degree below their product, so
  // the pair lives at degree 8 + 120 - 1.
  CHECK(w.degree == 127);
  CHECK(w.spheres_a == 0);
  CHECK(w.spheres_b == 7);
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_a, w.spheres_a));
  CHECK(consum_cover_check(w.k, w.degree, w.pieces_b, w.spheres_b));
}

TEST_CASE("torus sums use the self-cover trick") {
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("T3 # T3"));
  CHECK(r.verdict == Verdict::NotExceptional);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->covers.has_value());
  CHECK(consum_cover_check(2, r.witness->covers->degree, r.witness->covers->pieces_a,
                           r.witness->covers->spheres_a));
}

TEST_CASE("opaque labels flag through or stay undetermined") {
  CHECK(manifold_verdict(ManifoldDescriptor::parse("other:x=exceptional")).verdict ==
        Verdict::Exceptional);
  CHECK(manifold_verdict(ManifoldDescriptor::parse("other:x=not_exceptional")).verdict ==
        Verdict::NotExceptional);
  CHECK(manifold_verdict(ManifoldDescriptor::parse("other:x")).verdict ==
        Verdict::Undetermined);
}

TEST_CASE("spherical verdicts propagate the subgroup witness") {
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("sph:Q8n:2"));
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->subgroups.has_value());
  CHECK(r.witness->subgroups->index == 2);
  CHECK(r.witness->subgroups->fingerprint_a != r.witness->subgroups->fingerprint_b);
}

TEST_CASE("sol verdicts carry the trace pair at square degree") {
  VerdictReport r = manifold_verdict(ManifoldDescriptor::parse("sol:2,1,1,1"));
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->sol.has_value());
  CHECK(r.witness->sol->base_trace == 3);
  CHECK(r.witness->sol->power_trace != r.witness->sol->base_trace);
  CHECK_FALSE(r.witness->note.empty());
}
