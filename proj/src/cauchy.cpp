#include "wavent/cauchy.hpp"

#include <cmath>

#include "wavent/errors.hpp"

namespace wavent {
namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

void require_zero_mode(const SpectralField& s, double m, double frac_tol,
                       const char* where) {
  if (m > 0.0) return;
  if (fft::zero_mode_fraction(s) > frac_tol)
    throw SingularMode(std::string(where) +
                       ": p = 0 mode of a massless input exceeds tolerance");
}

}  // namespace

CauchyData::CauchyData(Field f_, Field g_, double m)
    : f(std::move(f_)), g(std::move(g_)), mass(m) {
  require_same_grid(f.grid, g.grid, "CauchyData");
  if (!(mass >= 0.0)) throw BadField("CauchyData: mass must be >= 0");
  if (mass == 0.0 && grid().d < 2)
    throw BadField("CauchyData: massless data requires d >= 2");
  if (!f.all_finite() || !g.all_finite())
    throw BadField("CauchyData: non-finite samples");
}

double CauchyData::boundary_fraction() const {
  double frac = std::max(boundary_shell_fraction(f), boundary_shell_fraction(g));
  for (int a = 0; a < grid().d; ++a)
    frac = std::max(frac, boundary_shell_fraction(spectral_derivative(f, a)));
  return frac;
}

void CauchyData::require_decay(const Tolerances& tol) const {
  if (boundary_fraction() > tol.boundary_decay)
    throw DecayViolated("CauchyData: boundary-decay invariant violated");
}

double norm_pm(const Field& f, double m, int sign, const Tolerances& tol) {
  SpectralField s = fft::forward(f);
  const double m2 = m * m;
  if (sign > 0)
    return fft::quadrature(s, [m2](double p2) { return std::sqrt(p2 + m2); });
  require_zero_mode(s, m, tol.zero_mode, "norm_pm");
  return fft::quadrature(s, [m2](double p2) {
    const double w2 = p2 + m2;
    return w2 > 0.0 ? 1.0 / std::sqrt(w2) : 0.0;
  });
}

std::complex<double> inner_product(const CauchyData& a, const CauchyData& b,
                                   const Tolerances& tol) {
  require_same_grid(a.grid(), b.grid(), "inner_product");
  if (a.mass != b.mass) throw GridMismatch("inner_product: masses differ");
  const double m2 = a.mass * a.mass;

  SpectralField fa = fft::forward(a.f), fb = fft::forward(b.f);
  SpectralField ga = fft::forward(a.g), gb = fft::forward(b.g);
  require_zero_mode(ga, a.mass, tol.zero_mode, "inner_product");
  require_zero_mode(gb, b.mass, tol.zero_mode, "inner_product");

  double re = 0.0;
  spectral_for_each(fa, [&](std::int64_t ci, const std::array<int, 3>& ks, double mult) {
    const double mu = std::sqrt(effective_p2(a.grid(), ks) + m2);
    const double cross_f = fa.c[ci].real() * fb.c[ci].real() +
                           fa.c[ci].imag() * fb.c[ci].imag();
    const double cross_g = ga.c[ci].real() * gb.c[ci].real() +
                           ga.c[ci].imag() * gb.c[ci].imag();
    re += mult * (mu * cross_f + (mu > 0.0 ? cross_g / mu : 0.0));
  });
  re *= a.grid().cell_volume() / static_cast<double>(a.grid().npoints());

  // Symplectic part (g1, f2) - (f1, g2) in real space.
  double im = 0.0;
  for (std::int64_t i = 0; i < a.f.size(); ++i)
    im += a.g.v[i] * b.f.v[i] - a.f.v[i] * b.g.v[i];
  im *= a.grid().cell_volume();
  return {re, im};
}

CauchyData apply_complex_structure(const CauchyData& a, const Tolerances& tol) {
  SpectralField fs = fft::forward(a.f);
  SpectralField gs = fft::forward(a.g);
  require_zero_mode(gs, a.mass, tol.zero_mode, "apply_complex_structure");

  const double m2 = a.mass * a.mass;
  SpectralField finv = gs, fmul = fs;
  spectral_for_each(fs, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    const double mu = std::sqrt(effective_p2(a.grid(), ks) + m2);
    finv.c[ci] = mu > 0.0 ? gs.c[ci] / mu : 0.0;
    fmul.c[ci] = -mu * fs.c[ci];
  });
  return CauchyData(fft::backward(finv), fft::backward(fmul), a.mass);
}

CauchyData evolve(const CauchyData& a, double t, const Tolerances& tol) {
  SpectralField fs = fft::forward(a.f);
  SpectralField gs = fft::forward(a.g);
  // The propagator itself is regular at p = 0 (sinc), but massless data with
  // a non-vanishing g zero mode is outside the wave space; reject it.
  require_zero_mode(gs, a.mass, tol.zero_mode, "evolve");

  const double m2 = a.mass * a.mass;
  SpectralField ft = fs, gt = gs;
  spectral_for_each(fs, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    const double mu = std::sqrt(effective_p2(a.grid(), ks) + m2);
    const double c = std::cos(mu * t), s = std::sin(mu * t);
    ft.c[ci] = c * fs.c[ci] + t * sinc(mu * t) * gs.c[ci];
    gt.c[ci] = -mu * s * fs.c[ci] + c * gs.c[ci];
  });
  CauchyData out(fft::backward(ft), fft::backward(gt), a.mass);
  if (out.boundary_fraction() > tol.boundary_decay)
    throw DecayViolated("evolve: output violates the boundary-decay invariant");
  return out;
}

double energy_form(const CauchyData& a) {
  SpectralField fs = fft::forward(a.f);
  SpectralField gs = fft::forward(a.g);
  const double m2 = a.mass * a.mass;
  double e = fft::quadrature(fs, [m2](double p2) { return p2 + m2; }) +
             fft::quadrature(gs, [](double) { return 1.0; });
  return 0.5 * e;
}

double momentum_form(const CauchyData& a, int axis) {
  SpectralField fs = fft::forward(a.f);
  SpectralField gs = fft::forward(a.g);
  double acc = 0.0;
  // (Phi, P_axis Phi) = \int g d_axis f dx = \int T_{0,axis} dx; spectrally
  // -sum p_axis Im[conj(G) F]. The sign makes P_+ = P + P_1 annihilate
  // right-movers.
  spectral_for_each(fs, [&](std::int64_t ci, const std::array<int, 3>& ks, double mult) {
    const double p = effective_p(a.grid(), ks[axis]);
    if (p == 0.0) return;
    const std::complex<double> z = std::conj(gs.c[ci]) * fs.c[ci];
    acc -= mult * p * z.imag();
  });
  return acc * a.grid().cell_volume() / static_cast<double>(a.grid().npoints());
}

}  // namespace wavent
