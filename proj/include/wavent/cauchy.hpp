#pragma once

#include <complex>

#include "wavent/fft.hpp"
#include "wavent/grid.hpp"

namespace wavent {

// Tolerances shared by the wave-space operations.
struct Tolerances {
  // Max admissible fraction of L2 mass in the outer 10% shell of the box.
  double boundary_decay = 1e-8;
  // Max admissible fraction of spectral mass in the p = 0 mode before an
  // operation dividing by mu rejects a massless input.
  double zero_mode = 1e-10;
};

// Cauchy data <f, g> of a Klein-Gordon solution at time zero: f the field
// amplitude, g its time derivative, mass m >= 0 (hbar = c = 1). Massless
// data requires d >= 2.
struct CauchyData {
  Field f;
  Field g;
  double mass = 0.0;

  CauchyData() = default;
  CauchyData(Field f_, Field g_, double m);

  const GridSpec& grid() const { return f.grid; }

  // Boundary-decay invariant: fraction of the discrete L2 mass of f, g and
  // |grad f| in the outermost 10% shell must stay below tol.boundary_decay.
  double boundary_fraction() const;
  void require_decay(const Tolerances& tol = {}) const;
};

// \int (|p|^2 + m^2)^(sign/2) |fhat|^2 dp by spectral quadrature.
// sign = -1 requires m > 0 or a vanishing zero mode (SingularMode otherwise).
double norm_pm(const Field& f, double m, int sign, const Tolerances& tol = {});

// Complex inner product of the wave Hilbert space:
//   Re = <f1,f2>_+ + <g1,g2>_-   (the H_{m,+} (+) H_{m,-} pairing)
//   Im = (g1,f2)_L2 - (f1,g2)_L2 (the symplectic form)
std::complex<double> inner_product(const CauchyData& a, const CauchyData& b,
                                   const Tolerances& tol = {});

// The complex structure <f,g> -> <mu^{-1} g, -mu f>.
CauchyData apply_complex_structure(const CauchyData& a, const Tolerances& tol = {});

// Spectrally exact free evolution by time t:
//   f_t = cos(mu t) f + t sinc(mu t) g,   g_t = -mu sin(mu t) f + cos(mu t) g.
// Throws DecayViolated if the output breaks the boundary-decay invariant.
CauchyData evolve(const CauchyData& a, double t, const Tolerances& tol = {});

// Quadratic-form observables. The normalisation is fixed by
// (Phi, P Phi) = \int T00 dx, i.e. one half of the H12 pairing applied to
// mu Phi; the time-translation generator P acts as mu on the one-particle
// space, the spatial generator P1 as the signed momentum component.
double energy_form(const CauchyData& a);           // (Phi, P Phi), spectral
double momentum_form(const CauchyData& a, int axis = 0);  // (Phi, P_axis Phi)

}  // namespace wavent
