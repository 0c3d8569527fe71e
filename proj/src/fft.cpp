#include "wavent/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <unordered_map>

namespace wavent {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Process-wide plan cache. FFTW planning is not thread safe; execution via
// the new-array interface is. FFTW_UNALIGNED keeps new-array execution valid
// for any buffer, FFTW_ESTIMATE keeps planning deterministic.
class PlanCache {
 public:
  static PlanPair& get(const GridSpec& g) {
    static PlanCache cache;
    std::scoped_lock lock(cache.mu_);
    auto key = std::make_pair(g.d, g.n);
    auto it = cache.plans_.find(key);
    if (it != cache.plans_.end()) return it->second;

    std::int64_t nreal = g.npoints();
    std::int64_t ncplx = nreal / g.n * (g.n / 2 + 1);
    double* in = fftw_alloc_real(nreal);
    fftw_complex* out = fftw_alloc_complex(ncplx);
    int dims[3] = {g.n, g.n, g.n};
    PlanPair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_r2c(g.d, dims, in, out, flags);
    p.bwd = fftw_plan_dft_c2r(g.d, dims, out, in, flags);
    fftw_free(in);
    fftw_free(out);
    if (!p.fwd || !p.bwd) throw Error("fft: planning failed");
    return cache.plans_.emplace(key, p).first->second;
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, PlanPair> plans_;
};

struct Scratch {
  std::vector<double> re;
  std::vector<std::complex<double>> cx;
};

Scratch& scratch_for(std::int64_t nreal, std::int64_t ncplx) {
  thread_local std::unordered_map<std::int64_t, Scratch> pool;
  Scratch& s = pool[(nreal << 20) ^ ncplx];
  s.re.resize(nreal);
  s.cx.resize(ncplx);
  return s;
}

}  // namespace

namespace fft {

SpectralField forward(const Field& f) {
  const GridSpec& g = f.grid;
  PlanPair& plans = PlanCache::get(g);
  SpectralField out;
  out.grid = g;
  out.c.resize(out.ncoef());
  Scratch& s = scratch_for(g.npoints(), out.ncoef());
  std::copy(f.v.begin(), f.v.end(), s.re.begin());
  fftw_execute_dft_r2c(plans.fwd, s.re.data(),
                       reinterpret_cast<fftw_complex*>(out.c.data()));
  return out;
}

Field backward(const SpectralField& sp) {
  const GridSpec& g = sp.grid;
  PlanPair& plans = PlanCache::get(g);
  Field out(g);
  Scratch& s = scratch_for(g.npoints(), sp.ncoef());
  // c2r destroys its input; work on the scratch copy.
  std::copy(sp.c.begin(), sp.c.end(), s.cx.begin());
  fftw_execute_dft_c2r(plans.bwd, reinterpret_cast<fftw_complex*>(s.cx.data()),
                       out.v.data());
  const double scale = 1.0 / static_cast<double>(g.npoints());
  for (double& x : out.v) x *= scale;
  return out;
}

SpectralField derivative(const SpectralField& s, int axis) {
  SpectralField out = s;
  const double dp = s.grid.dp();
  const int n = s.grid.n;
  spectral_for_each(out, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    if (ks[axis] == n / 2) {
      out.c[ci] = 0.0;
      return;
    }
    out.c[ci] *= std::complex<double>(0.0, dp * ks[axis]);
  });
  return out;
}

SpectralField laplacian(const SpectralField& s) {
  SpectralField out = s;
  spectral_for_each(out, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    out.c[ci] *= -effective_p2(s.grid, ks);
  });
  return out;
}

namespace {

// Copy the sub-Nyquist band of `src` into `dst` (different n, same d, same
// box), rescaling plain-DFT coefficients by the point-count ratio.
void copy_band(const SpectralField& src, SpectralField& dst) {
  const int keep = std::min(src.grid.n, dst.grid.n) / 2;  // strictly below
  const double scale = static_cast<double>(dst.grid.npoints()) /
                       static_cast<double>(src.grid.npoints());
  std::fill(dst.c.begin(), dst.c.end(), std::complex<double>(0.0, 0.0));
  const int d = src.grid.d;
  const int ns = src.grid.n, nd = dst.grid.n;
  spectral_for_each(src, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    for (int a = 0; a < d; ++a)
      if (std::abs(ks[a]) >= keep || ks[a] == ns / 2) return;
    std::int64_t di = 0;
    for (int a = 0; a < d - 1; ++a) {
      const int idx = ks[a] >= 0 ? ks[a] : ks[a] + nd;
      di = di * nd + idx;
    }
    di = di * (nd / 2 + 1) + ks[d - 1];
    dst.c[di] = scale * src.c[ci];
  });
}

}  // namespace

namespace {

Field upsample(const Field& f, const GridSpec& fine) {
  SpectralField padded;
  padded.grid = fine;
  padded.c.resize(padded.ncoef());
  copy_band(forward(f), padded);
  return backward(padded);
}

SpectralField downsample_spectrum(const Field& ffine, const GridSpec& coarse) {
  SpectralField out;
  out.grid = coarse;
  out.c.resize(out.ncoef());
  copy_band(forward(ffine), out);
  return out;
}

}  // namespace

Field laplacian_of_square(const Field& f) {
  const GridSpec& g = f.grid;
  GridSpec fine(g.d, 2 * g.n, g.half_extent);
  Field ffine = upsample(f, fine);
  for (double& v : ffine.v) v *= v;
  return backward(laplacian(downsample_spectrum(ffine, g)));
}

Field dealiased_product(const Field& a, const Field& b) {
  require_same_grid(a.grid, b.grid, "dealiased_product");
  const GridSpec& g = a.grid;
  GridSpec fine(g.d, 2 * g.n, g.half_extent);
  Field af = upsample(a, fine);
  Field bf = upsample(b, fine);
  for (std::int64_t i = 0; i < af.size(); ++i) af.v[i] *= bf.v[i];
  return backward(downsample_spectrum(af, g));
}

SpectralField shift(const SpectralField& s, int axis, double delta) {
  SpectralField out = s;
  spectral_for_each(out, [&](std::int64_t ci, const std::array<int, 3>& ks, double) {
    const double p = effective_p(s.grid, ks[axis]);
    if (p != 0.0) out.c[ci] *= std::polar(1.0, -p * delta);
  });
  return out;
}

double zero_mode_fraction(const SpectralField& s) {
  double total = 0.0;
  spectral_for_each(s, [&](std::int64_t ci, const std::array<int, 3>&, double mult) {
    total += mult * std::norm(s.c[ci]);
  });
  return total > 0.0 ? std::norm(s.c[0]) / total : 0.0;
}

double eval_trig_1d(const SpectralField& s, double x) {
  if (s.grid.d != 1) throw Error("eval_trig_1d: 1-d only");
  const int n = s.grid.n;
  const double theta0 = s.grid.dp() * (x + s.grid.half_extent);
  double acc = s.c[0].real();
  for (int k = 1; k < n / 2; ++k) {
    const double th = theta0 * k;
    acc += 2.0 * (s.c[k].real() * std::cos(th) - s.c[k].imag() * std::sin(th));
  }
  acc += s.c[n / 2].real() * std::cos(theta0 * (n / 2));
  return acc / n;
}

}  // namespace fft

Field spectral_derivative(const Field& f, int axis) {
  return fft::backward(fft::derivative(fft::forward(f), axis));
}

namespace {

void lagrange6_weights(double t, double w[6]) {
  // Nodes at offsets -2..3 relative to the cell start; t in [0,1).
  // denom[i] = prod_{j != i} (i - j) for nodes 0..5.
  static const double denom[6] = {-120.0, 24.0, -12.0, 12.0, -24.0, 120.0};
  const double u = t + 2.0;  // position relative to node 0 at offset -2
  for (int i = 0; i < 6; ++i) {
    double num = 1.0;
    for (int j = 0; j < 6; ++j)
      if (j != i) num *= (u - j);
    w[i] = num / denom[i];
  }
}

}  // namespace

double interpolate6(const Field& f, const std::array<double, 3>& x) {
  const GridSpec& g = f.grid;
  const int n = g.n;
  const double dx = g.dx();
  int base[3] = {0, 0, 0};
  double w[3][6];
  for (int a = 0; a < g.d; ++a) {
    const double s = (x[a] + g.half_extent) / dx;
    const double fl = std::floor(s);
    base[a] = static_cast<int>(fl);
    lagrange6_weights(s - fl, w[a]);
  }
  double acc = 0.0;
  const int span = g.d;
  int off[3] = {0, 0, 0};
  // Up to 6^d terms, separable weights, periodic index wrap.
  const int count = (span == 1) ? 6 : (span == 2 ? 36 : 216);
  for (int t = 0; t < count; ++t) {
    int rest = t;
    double ww = 1.0;
    std::array<int, 3> k{0, 0, 0};
    for (int a = span - 1; a >= 0; --a) {
      off[a] = rest % 6;
      rest /= 6;
      ww *= w[a][off[a]];
      int idx = (base[a] + off[a] - 2) % n;
      if (idx < 0) idx += n;
      k[a] = idx;
    }
    acc += ww * f.v[f.index(k)];
  }
  return acc;
}

}  // namespace wavent
