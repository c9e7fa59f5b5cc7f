#include "census/bundles.hpp"

#include <cstdlib>
#include <stdexcept>

namespace census {

std::string CircleBundle::str() const {
  return "bundle(g=" + std::to_string(genus) + ",e=" + std::to_string(euler) + ")";
}

long long cover_euler(long long e, long long ell, long long m) {
  if (ell < 1 || m < 1) throw std::invalid_argument("cover degrees must be positive");
  if ((ell * e) % m != 0)
    throw std::invalid_argument("fiber degree must divide ell * e");
  return ell * e / m;
}

AbelianGroup h1_circle_bundle(const CircleBundle& b) {
  if (b.genus < 0) throw std::invalid_argument("genus must be nonnegative");
  AbelianGroup h1;
  long long e = std::llabs(b.euler);
  if (e == 0) {
    h1.rank = 2 * b.genus + 1;
  } else {
    h1.rank = 2 * b.genus;
    if (e >= 2) h1.torsion.push_back(Int(e));
  }
  return h1;
}

namespace {

BundleCover fiberwise_cover(const CircleBundle& b, long long ell, long long m) {
  BundleCover c;
  c.base_degree = ell;
  c.fiber_degree = m;
  c.total.genus = static_cast<int>(ell * (b.genus - 1) + 1);
  c.total.euler = cover_euler(b.euler, ell, m);
  return c;
}

CircleBundleWitness finish(const CircleBundle& b, BundleCover a, BundleCover c) {
  CircleBundleWitness w;
  w.has_witness = true;
  w.degree = a.degree();
  if (a.degree() != c.degree()) throw std::logic_error("witness covers have unequal degrees");
  w.cover_a = a;
  w.cover_b = c;
  w.h1_a = h1_circle_bundle(a.total);
  w.h1_b = h1_circle_bundle(c.total);
  if (w.h1_a == w.h1_b) throw std::logic_error("witness covers have equal first homology");
  return w;
}

}  // namespace

CircleBundleWitness circle_bundle_witness(const CircleBundle& b, long long d) {
  if (b.genus < 1) throw std::invalid_argument("witness construction needs genus >= 1");
  if (d < 1) throw std::invalid_argument("cover degree must be positive");

  if (b.euler == 0) {
    if (b.genus == 1) {
      CircleBundleWitness w;
      w.reason = "every finite cover of the 3-torus is the 3-torus";
      return w;
    }
    // Base covers raise genus, fiber covers do not, and e stays 0 either way.
    long long deg = d >= 2 ? d : 2;
    return finish(b, fiberwise_cover(b, deg, 1), fiberwise_cover(b, 1, deg));
  }

  // Look for a mixed cover (ell, m) with m > 1 at the requested degree; the
  // pullback (d, 1) then differs from it in the torsion of H_1.
  for (long long m = 2; m <= d; ++m) {
    if (d % m != 0) continue;
    long long ell = d / m;
    if ((ell * b.euler) % m != 0) continue;
    return finish(b, fiberwise_cover(b, d, 1), fiberwise_cover(b, ell, m));
  }

  // No mixed divisor at degree d: drop to a degree that always works,
  // |e| >= 2 via (|e|, 1) against (1, |e|), and |e| = 1 via degree 4.
  long long e = std::llabs(b.euler);
  if (e >= 2) return finish(b, fiberwise_cover(b, e, 1), fiberwise_cover(b, 1, e));
  return finish(b, fiberwise_cover(b, 4, 1), fiberwise_cover(b, 2, 2));
}

void SolBundle::validate() const {
  if (a * d - b * c != 1) throw std::invalid_argument("monodromy must have determinant 1");
  long long t = a + d;
  if (t <= 2 && t >= -2) throw std::invalid_argument("monodromy must be Anosov: |trace| > 2");
}

std::string SolBundle::str() const {
  return "sol[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + "]";
}

Int monodromy_power_trace(const SolBundle& s, long long d) {
  s.validate();
  if (d < 1) throw std::invalid_argument("power must be positive");
  // 2x2 exact power by repeated squaring.
  Int m[4] = {s.a, s.b, s.c, s.d};
  Int r[4] = {1, 0, 0, 1};
  long long e = d;
  auto mul = [](const Int x[4], const Int y[4], Int out[4]) {
    Int t0 = x[0] * y[0] + x[1] * y[2];
    Int t1 = x[0] * y[1] + x[1] * y[3];
    Int t2 = x[2] * y[0] + x[3] * y[2];
    Int t3 = x[2] * y[1] + x[3] * y[3];
    out[0] = t0;
    out[1] = t1;
    out[2] = t2;
    out[3] = t3;
  };
  while (e > 0) {
    if (e & 1) mul(r, m, r);
    mul(m, m, m);
    e >>= 1;
  }
  return r[0] + r[3];
}

SolWitness sol_witness(const SolBundle& s, long long d) {
  s.validate();
  if (d < 1) throw std::invalid_argument("cover degree must be positive");
  SolWitness w;
  w.degree = d;
  w.base_trace = Int(s.trace());
  w.power_trace = monodromy_power_trace(s, d);
  return w;
}

}  // namespace census
