// Independent oracles for the test suites. Everything here must stay
// independent of the spectral implementation paths it checks: quadrature is
// adaptive Simpson on analytic integrands, derivatives are high-order finite
// differences, eigenvalues come from a dense solver.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb, double whole,
                          double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

// Pre-splits into panels so sharply localized integrands cannot fool the
// convergence estimate.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const int panels = 16;
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double pa = a + i * h, pb = pa + h;
    const double m = 0.5 * (pa + pb);
    const double fa = f(pa), fm = f(m), fb = f(pb);
    const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson_rec(f, pa, pb, fa, fm, fb, whole, tol / panels, 44);
  }
  return total;
}

// Fourier transform of exp(-alpha x^2) under fhat(p) = (2pi)^(-1/2) \int f e^{-ipx} dx:
// fhat(p) = exp(-p^2/(4 alpha)) / sqrt(2 alpha).
inline double gaussian_hat(double alpha, double p) {
  return std::exp(-p * p / (4.0 * alpha)) / std::sqrt(2.0 * alpha);
}

// Central finite difference of order 8 for a sampled periodic array.
inline double fd8_derivative(const std::vector<double>& v, std::size_t i, double dx) {
  static const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  const std::size_t n = v.size();
  double acc = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const std::size_t ip = (i + k) % n, im = (i + n - k) % n;
    acc += c[k - 1] * (v[ip] - v[im]);
  }
  return acc / dx;
}

// Deterministic Halton sequence (bases 2, 3, 5) for quasi-Monte-Carlo.
inline double halton(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  for (std::uint64_t i = index + 1; i > 0; i /= base) {
    f /= base;
    r += f * static_cast<double>(i % base);
  }
  return r;
}

}  // namespace oracles
