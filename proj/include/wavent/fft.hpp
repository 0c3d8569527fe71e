#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "wavent/grid.hpp"

namespace wavent {

// Half-complex spectrum of a real field (r2c layout: the last axis keeps
// n/2+1 entries, the rest follow by Hermitian symmetry).
//
// Conventions, used consistently everywhere:
//   * signed wavenumbers p_k = pi*k/L, k = -n/2 .. n/2-1 per axis;
//   * the forward transform approximates the continuum
//       fhat(p) = (2pi)^(-d/2) \int f(x) e^{-i p.x} dx,
//     so Parseval reads \int |fhat|^2 dp = \int f^2 dx;
//   * spectral quadrature of \int W(p) |fhat(p)|^2 dp collapses to
//       (dx^d / n^d) * sum_k mult_k W(p_k) |C_k|^2
//     over the stored plain-DFT coefficients C_k, where mult_k is the
//     Hermitian multiplicity of the halved last axis.
//
// The dispersion sampler is mu(p) = sqrt(|p|^2 + m^2).
struct SpectralField {
  GridSpec grid;
  std::vector<std::complex<double>> c;

  int nlast() const { return grid.n / 2 + 1; }
  std::int64_t ncoef() const {
    std::int64_t m = 1;
    for (int a = 0; a < grid.d - 1; ++a) m *= grid.n;
    return m * nlast();
  }
};

// Effective wavenumber of a stored mode. Nyquist components are shared
// between +-p and cannot carry phase or sign information; every spectral
// multiplier here (derivatives, mu powers, shifts) treats them as frequency
// zero, which keeps cross-route identities exact for resolved data.
inline double effective_p(const GridSpec& g, int k_signed) {
  return (k_signed == g.n / 2) ? 0.0 : g.dp() * k_signed;
}
inline double effective_p2(const GridSpec& g, const std::array<int, 3>& ks) {
  double p2 = 0.0;
  for (int a = 0; a < g.d; ++a) {
    const double p = effective_p(g, ks[a]);
    p2 += p * p;
  }
  return p2;
}

// Calls fn(ci, ks, mult) for every stored coefficient: ci the flat index,
// ks the signed integer wavenumbers (Nyquist reported as +n/2), mult the
// Hermitian multiplicity (2 for interior last-axis modes, else 1).
template <class F>
void spectral_for_each(const SpectralField& s, F&& fn) {
  const int d = s.grid.d;
  const int n = s.grid.n;
  const int nl = s.nlast();
  std::array<int, 3> k{0, 0, 0};
  std::int64_t outer = 1;
  for (int a = 0; a < d - 1; ++a) outer *= n;
  for (std::int64_t o = 0; o < outer; ++o) {
    std::int64_t rest = o;
    for (int a = d - 2; a >= 0; --a) {
      int idx = static_cast<int>(rest % n);
      rest /= n;
      k[a] = (idx <= n / 2) ? idx : idx - n;
    }
    const std::int64_t base = o * nl;
    for (int kl = 0; kl < nl; ++kl) {
      k[d - 1] = kl;
      const double mult = (kl == 0 || kl == n / 2) ? 1.0 : 2.0;
      fn(base + kl, k, mult);
    }
  }
}

namespace fft {

// Forward / backward transforms. FFTW with FFTW_ESTIMATE plans behind a
// process-wide cache; deterministic output.
SpectralField forward(const Field& f);
Field backward(const SpectralField& s);

// d/dx_axis (multiplier i p_axis, Nyquist zeroed to keep the output real).
SpectralField derivative(const SpectralField& s, int axis);
// Multiplier -|p|^2 (Laplacian).
SpectralField laplacian(const SpectralField& s);
// Laplacian of f^2 with a dealiased product: f is evaluated on a doubled
// grid via zero padding, squared there, and truncated back. Squaring doubles
// the bandwidth; without the padding the aliases pollute the result at the
// 1e-5 level for typical bump data.
Field laplacian_of_square(const Field& f);
// Pointwise product with the same dealiasing (both factors padded to the
// doubled grid, multiplied there, truncated back to the stored band).
Field dealiased_product(const Field& a, const Field& b);
// Translate the trig interpolant: f(x) -> f(x - delta) along one axis.
SpectralField shift(const SpectralField& s, int axis, double delta);

// (dx^d/n^d) sum_k mult W(|p_k|^2) |C_k|^2, i.e. \int W |fhat|^2 dp.
template <class W>
double quadrature(const SpectralField& s, W&& weight_of_p2) {
  double acc = 0.0;
  spectral_for_each(s, [&](std::int64_t ci, const std::array<int, 3>& ks, double mult) {
    acc += mult * weight_of_p2(effective_p2(s.grid, ks)) * std::norm(s.c[ci]);
  });
  return acc * s.grid.cell_volume() / static_cast<double>(s.grid.npoints());
}

// |C_0|^2 / sum |C_k|^2 (fraction of spectral mass in the zero mode).
double zero_mode_fraction(const SpectralField& s);

// Evaluate the trig interpolant at an arbitrary point (d = 1 only).
double eval_trig_1d(const SpectralField& s, double x);

}  // namespace fft

// 6-point separable Lagrange interpolation at an arbitrary point, periodic
// wraparound at the box edges. Adequate wherever spectral evaluation would
// be too slow (surface quadrature, resampling).
double interpolate6(const Field& f, const std::array<double, 3>& x);

// Spectral partial derivative as a real field.
Field spectral_derivative(const Field& f, int axis);

}  // namespace wavent
