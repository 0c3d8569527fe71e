#pragma once

#include <optional>

#include "wavent/entropy.hpp"

namespace wavent {

// Outcome of an entropy/energy bound check. The surrogate is a computable
// upper bound on the local entropy: the exact massless ball entropy when
// available (m = 0, ball, d >= 2), otherwise the smaller of the two
// half-space entropies, which dominates S by monotonicity.
struct BoundReport {
  double half_width = 0.0;        // R of the region
  double strip_half_width = 0.0;  // half-width of the enclosing strip used
  double energy = 0.0;            // E(Phi|B)
  double s_plus = 0.0;            // S(Phi | x_axis > strip lo)
  double s_minus = 0.0;           // S(Phi | x_axis < strip hi)
  double s_mean = 0.0;
  std::optional<double> s_ball;   // exact massless ball entropy
  double entropy_surrogate = 0.0;
  bool surrogate_is_exact = false;
  double gamma_correction = 0.0;  // pi * mean of the two exterior minima
  double bound = 0.0;             // 2 pi R_strip E + gamma correction
  double identity_gap = 0.0;      // s_mean - 2 pi R_strip E (localized only)
  double margin = 0.0;            // bound - entropy_surrogate
  double tolerance = 0.0;         // absolute tolerance used for the verdict
  bool pass = false;
};

// \int_B T00 with sub-cell boundary weighting.
double local_energy(const CauchyData& a, const Region& b);

// Relative L2 mass of f and g outside the region (the support check).
double exterior_mass_fraction(const CauchyData& a, const Region& b);

// Bekenstein check for data supported in the closure of B. Verifies the
// half-space chain (both entropies nonnegative, their mean equal to
// 2 pi R E) and, in the exactly computable massless-ball case, the bound
// S(Phi|B) <= 2 pi R E itself. Throws NotLocalized if mass leaks out of B.
BoundReport check_localized(const CauchyData& a, const Region& b,
                            double rel_tol = 1e-6);

// Corrected bound for data not supported in B:
//   S <= 2 pi R_strip E(Phi|B) + (pi/2) (Gamma_lo + Gamma_hi),
// with Gamma_lo/hi the minimal exterior weighted Dirichlet energies for the
// boundary trace of f in the two strip orientations (from the variational
// solver). strip_lo/strip_hi is the enclosing slab actually used; it may be
// slightly wider than the region so the exterior mesh keeps a margin from
// the degenerate weight plane.
BoundReport check_nonlocalized(const CauchyData& a, const Region& b,
                               double gamma_lo, double gamma_hi,
                               double strip_lo, double strip_hi,
                               double rel_tol = 1e-6);

// Radial multiplication profile of the massless modular generator on the
// unit ball, M(r) = (1 - r^2)/2, sampled on a staggered radial grid.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> value;
  double eval(double radius) const;  // linear interpolation
};
RadialProfile massless_modular_profile(int nodes = 1024);

// pi \int_B g M(|x - c|/R) g dx with M taken from the sampled profile; for
// g-only data this equals ball_entropy_massless.
double modular_profile_entropy(const RadialProfile& m, const Field& g,
                               const Region& ball);

// Quadratic-form margins of the modular-Hamiltonian bounds:
//   g-margin = pi R \int_B g^2              - S(<0,g>|B)
//   f-margin = pi R \int_B (|grad f|^2 + m^2 f^2) - S(<f,0>|B)
// both nonnegative; S is the computable surrogate. Requires localized data.
struct ModularMargins {
  double g_margin = 0.0;
  double f_margin = 0.0;
};
ModularMargins modular_bound_margins(const CauchyData& a, const Region& b);

}  // namespace wavent
