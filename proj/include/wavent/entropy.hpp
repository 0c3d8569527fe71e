#pragma once

#include <vector>

#include "wavent/region.hpp"
#include "wavent/stress.hpp"

namespace wavent {

enum class Side { Greater, Less };

// Local entropy of the wave packet in the half-space {x_axis > cut} (or the
// mirrored side):
//   S = 2 pi \int_{x > cut} (x - cut) T00 dx.
//
// Quadrature: when spectral mass touches the cut plane, the data is first
// translated spectrally so the cut lands on a grid plane, then the trapezoid
// sum is Euler-Maclaurin corrected for the weight kink:
//   S/2pi = dx^d sum (x-a)_+ T  + (dx^2/12) Slice(T)(a) - (dx^4/240) Slice(T'')(a).
// When no mass sits near the plane the plain weighted sum is already
// spectrally accurate and is used as is.
double halfspace_entropy(const CauchyData& a, int axis, double cut, Side side,
                         const Field* precomputed_t00 = nullptr);

// The same value routed through the improved stress tensor:
//   2 pi \int (x-cut)_+ T00^i dx + pi (D/d) \int_{x=cut} f^2 dsigma,
// D = (d-1)/2. Agrees with halfspace_entropy for any m >= 0; serves as the
// dual-route identity check.
double halfspace_entropy_improved(const CauchyData& a, double cut, int axis = 0);

// Exact massless entropy of a ball of radius R centred at c:
//   S = pi R \int_B (1 - r^2/R^2) T00 dx + (pi D / R) \int_B f^2 dx.
// Unit ball at the origin is the primitive case; general balls follow from
// dilation covariance of the massless net. Requires m = 0, d >= 2.
double ball_entropy_massless(const CauchyData& a, const Region& ball);

// Per-cut entropy profile: S(cut) and the slice integral
// 2 pi \int T00 |_{x_axis = cut} dx_perp, which equals d^2 S / d cut^2.
struct CutProfile {
  double cut = 0.0;
  double entropy = 0.0;
  double slice_integral = 0.0;
};
std::vector<CutProfile> qdec_profile(const CauchyData& a, int axis,
                                     const std::vector<double>& cuts);

// Vertex of a right wedge in 1+1 spacetime coordinates (x0, x1).
struct WedgeVertex {
  double x0 = 0.0;
  double x1 = 0.0;
};

// Wedge entropy via translation covariance: evolve to time x0, then take the
// half-space entropy at cut x1 (right wedge for Side::Greater). Requires
// d = 1, m > 0.
double wedge_entropy(const CauchyData& a, const WedgeVertex& v,
                     Side side = Side::Greater);

// Residual of the entropy-balance identity
//   [S(x)-S(y)] - [Sbar(x)-Sbar(y)] = 2pi (y1-x1)(Phi,P Phi) + 2pi (y0-x0)(Phi,P1 Phi).
// scale carries the natural magnitude for relative comparison.
struct BalanceResult {
  double residual = 0.0;
  double scale = 0.0;
};
BalanceResult entropy_balance_residual(const CauchyData& a, const WedgeVertex& x,
                                       const WedgeVertex& y);

// S(x+r+s) + S(x) - S(x+r) - S(x+s); nonnegative for spacelike right-pointing
// r, s (throws NotSpacelikeRight otherwise).
double wedge_convexity_gap(const CauchyData& a, const WedgeVertex& x,
                           const std::array<double, 2>& r,
                           const std::array<double, 2>& s);

// Transverse slice sum dx^(d-1) * sum_perp F(..., plane, ...).
double slice_sum(const Field& F, int axis, int plane);

}  // namespace wavent
