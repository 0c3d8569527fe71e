#pragma once

#include <vector>

#include "wavent/cauchy.hpp"
#include "wavent/region.hpp"

namespace wavent {

// Sampled Dirichlet data on the region boundary: two endpoint values for an
// interval (d = 1), values at equispaced angles theta_j = 2 pi j / K on the
// circle (d = 2, closing periodically).
struct BoundaryData {
  std::vector<double> values;

  static BoundaryData interval(double inner, double outer) {
    return BoundaryData{{inner, outer}};
  }
  static BoundaryData circle(std::vector<double> v) { return BoundaryData{std::move(v)}; }
  static BoundaryData constant(int d, int angles, double value);
};

// Geometry of the exterior problem: the region B sits in {x1 > 0} and the
// mesh truncates at l_out (homogeneous Dirichlet there). d = 1 adds an inner
// truncation eps below the interval, where the weight degenerates.
struct ExteriorGeometry {
  int dim = 1;
  double mass = 0.0;
  // d = 1: interval (a, b) with 0 < eps < a < b < l_out.
  double a = 1.0, b = 2.0, eps = 1e-3;
  // d = 2: disk of radius rho centred at (cx, cy), cx > rho.
  double cx = 1.1, cy = 0.0, rho = 1.0;
  int angles = 192;  // d = 2 angular resolution == trace sample count
  double l_out = 16.0;
  int refine = 1;  // mesh density multiplier

  ExteriorGeometry scaled(double lambda) const;  // x -> lambda x, m -> m/lambda
};

// Discrete minimizer of J(u) = \int_ext x1 (|grad u|^2 + m^2 u^2) with trace
// h on dB. The mesh, nodal values, energy and the boundary-flux functional
// are exposed for the identity and convergence checks.
struct ExteriorSolution {
  ExteriorGeometry geo;
  // d = 1: nodes of the two segments (eps..a, b..l_out), values include the
  // Dirichlet endpoints. d = 2: polar rings times angles, ring 0 = dB.
  std::vector<double> nodes_x;   // d=1: positions; d=2: ring radii
  std::vector<double> values;    // nodal u (d=2: ring*K + j)
  int angles = 0;                // d=2 only
  int inner_nodes = 0;           // d=1: index where segment 2 begins
  double energy = 0.0;           // J(u_h)
  double flux = 0.0;             // \oint x1 h dn(u_h) dS, FD normal derivative

  // Evaluate the minimizer at a point of the exterior (0 beyond l_out and
  // in the dead weight region x1 <= 0).
  double eval(const std::array<double, 3>& x) const;
  // J(v) for arbitrary nodal values (competitor energies, Galerkin tests).
  double energy_of(const std::vector<double>& nodal) const;
};

ExteriorSolution solve_minimizer(const ExteriorGeometry& geo, const BoundaryData& h);

// Gamma_h = inf J(u): the energy of the discrete minimizer, with the
// boundary-flux cross-check and a truncation study at 2 l_out.
struct GammaResult {
  double value = 0.0;
  double flux = 0.0;
  double value_wide = 0.0;       // at 2 l_out
  double truncation_shift = 0.0; // |value - value_wide|
};
GammaResult gamma(const ExteriorGeometry& geo, const BoundaryData& h,
                  double truncation_tol = -1.0);

// Property report: quadratic homogeneity, scaling covariance
// Gamma(h_l, m/l, l B) = l^{d-1} Gamma(h, m, B), midpoint convexity in h,
// monotonicity in m, and the midpoint convexity gaps in m (reported, not
// asserted: the truncated problem can violate them near m = 0).
struct GammaProperties {
  double homogeneity_gap = 0.0;       // Gamma(2h) - 4 Gamma(h), relative
  double scaling_gap = 0.0;           // relative defect of the lambda law
  double h_convexity_gap = 0.0;       // (G(h1)+G(h2))/2 - G((h1+h2)/2)
  std::vector<double> gamma_of_mass;  // along the mass list
  bool m_monotone = true;
  std::vector<double> m_convexity_gaps;  // midpoint gaps along the list
};
GammaProperties gamma_properties_report(const ExteriorGeometry& geo,
                                        const BoundaryData& h1,
                                        const BoundaryData& h2,
                                        const std::vector<double>& masses);

// Glued field: f inside B-bar, the exterior minimizer outside, resampled on
// the wave grid. Throws TraceMismatch when f's boundary trace differs from
// the h the minimizer was solved with.
Field glue_extension(const Field& f, const ExteriorSolution& u, const Region& b,
                     double trace_tol = 1e-6);

// Boundary trace of a grid field sampled the way the solver expects it.
BoundaryData trace_of(const Field& f, const Region& b, int angles);

}  // namespace wavent
