#pragma once

#include <vector>

#include "wavent/region.hpp"
#include "wavent/stress.hpp"

namespace wavent {

// Staggered radial mesh on (0, 1] for the weighted forms
//   a(u, v) = \int_0^1 (1 + r^2) u' v' r^{d-1} dr,
//   m(u, v) = \int_0^1 u v r^{d-1} dr.
// Nodes sit at (i + 1/2) dr, which keeps the r = 0 coordinate singularity
// off the grid; the segment (0, r_0) extends u as a constant (natural
// condition), and a ghost segment (r_{n-1}, 1] pins u(1) = 0 (Dirichlet).
struct RadialMesh {
  int n = 64;
  int dim = 2;
  double dr = 0.0;
  std::vector<double> r;

  static RadialMesh make(int n, int dim);
};

// Exact P1 assembly of the two tridiagonal forms.
struct RadialForms {
  std::vector<double> a_diag, a_off;  // stiffness, weight (1+r^2) r^{d-1}
  std::vector<double> m_diag, m_off;  // mass, weight r^{d-1}
};
RadialForms assemble_radial(const RadialMesh& mesh);

// Rayleigh quotient a(u,u)/m(u,u) of nodal values (u(1) = 0 implied).
// Throws ZeroDenominator on a vanishing trial function.
double rayleigh_quotient(const RadialMesh& mesh, const std::vector<double>& u);

// Smallest eigenvalue of the pair (a, m) by shifted inverse iteration, with
// Richardson extrapolation over n and 2n.
struct Lambda1Result {
  double lambda_n = 0.0;       // at n nodes
  double lambda_2n = 0.0;      // at 2n nodes
  double extrapolated = 0.0;   // (4 lambda_2n - lambda_n) / 3
  std::vector<double> ground_state;  // at n nodes, positive normalisation
  int iterations = 0;
};
Lambda1Result lambda1(int dim, int n);

// Divergence-theorem residual on the time-zero grid:
//   \int_B f div(u grad g) + \int_B grad f . (u grad g) - \oint f u dng.
// scale carries the magnitudes of the individual terms (which cancel in the
// residual).
struct DivergenceIdentity {
  double volume_1 = 0.0;  // \int_B f div(u grad g), or the weighted Laplacian
  double volume_2 = 0.0;  // \int_B grad f . (u grad g)
  double surface_term = 0.0;
  double residual = 0.0;
  double scale = 0.0;
};
DivergenceIdentity divergence_identity_residual(const Field& f, const Field& g,
                                                const Field& u, const Region& ball);

// Residual of \int_B (1-r^2) lap(f^2) = 2 \oint f^2 dsigma - 2 d \int_B f^2
// for the unit ball.
DivergenceIdentity ball_laplacian_identity(const Field& f, const Region& ball);

}  // namespace wavent
