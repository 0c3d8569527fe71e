#include "wavent/entropy.hpp"

#include <cmath>

namespace wavent {

double slice_sum(const Field& F, int axis, int plane) {
  const GridSpec& g = F.grid;
  if (g.d == 1) return F.v[plane];
  std::int64_t stride = 1;
  for (int a = g.d - 1; a > axis; --a) stride *= g.n;
  const std::int64_t block = stride * g.n;
  double acc = 0.0;
  for (std::int64_t i = 0; i < F.size(); ++i) {
    if (static_cast<int>((i % block) / stride) == plane) acc += F.v[i];
  }
  return acc * std::pow(g.dx(), g.d - 1);
}

namespace {

// Weighted sum dx^d * sum w_side(x_axis) * F with w_> = (x-cut)_+ etc.
double weighted_sum(const Field& F, int axis, double cut, Side side) {
  const GridSpec& g = F.grid;
  double acc = 0.0;
  if (g.d == 1) {
    for (int k = 0; k < g.n; ++k) {
      const double w = (side == Side::Greater) ? g.coord(k) - cut : cut - g.coord(k);
      if (w > 0.0) acc += w * F.v[k];
    }
    return acc * g.cell_volume();
  }
  // Row-major: precompute the per-index weight along `axis`.
  std::vector<double> w(g.n);
  for (int k = 0; k < g.n; ++k) {
    const double v = (side == Side::Greater) ? g.coord(k) - cut : cut - g.coord(k);
    w[k] = v > 0.0 ? v : 0.0;
  }
  for (std::int64_t i = 0; i < F.size(); ++i) {
    const int k = F.unindex(i)[axis];
    if (w[k] > 0.0) acc += w[k] * F.v[i];
  }
  return acc * g.cell_volume();
}

// Per-plane sums of |F| along `axis` in a single strided pass.
std::vector<double> plane_abs_sums(const Field& F, int axis) {
  const GridSpec& g = F.grid;
  std::vector<double> sums(g.n, 0.0);
  std::int64_t stride = 1;
  for (int a = g.d - 1; a > axis; --a) stride *= g.n;
  const std::int64_t block = stride * g.n;
  for (std::int64_t i = 0; i < F.size(); ++i) {
    const int k = static_cast<int>((i % block) / stride);
    sums[k] += std::abs(F.v[i]);
  }
  return sums;
}

// Mass of F on the planes adjacent to the cut, relative to the total.
// Spectral-gradient ringing puts an ~1e-10 relative floor under t00 far from
// the support; below it the cut plane counts as mass-free.
bool plane_neighbourhood_empty(const Field& F, int axis, double cut) {
  const GridSpec& g = F.grid;
  const int j = static_cast<int>(std::lround((cut + g.half_extent) / g.dx()));
  const std::vector<double> sums = plane_abs_sums(F, axis);
  double local = 0.0, total = 0.0;
  for (int k = 0; k < g.n; ++k) {
    total += sums[k];
    if (k >= j - 2 && k <= j + 2) local += sums[k];
  }
  return local <= 1e-10 * std::max(total, 1e-300);
}

int aligned_plane(const GridSpec& g, double cut) {
  const int j = static_cast<int>(std::lround((cut + g.half_extent) / g.dx()));
  if (j < 2 || j > g.n - 3)
    throw RegionOutsideGrid("cut too close to the box edge");
  return j;
}

CauchyData shift_data(const CauchyData& a, int axis, double delta) {
  // data'(x) = data(x + delta): features at `cut` move to `cut - delta`.
  SpectralField fs = fft::shift(fft::forward(a.f), axis, -delta);
  SpectralField gs = fft::shift(fft::forward(a.g), axis, -delta);
  return CauchyData(fft::backward(fs), fft::backward(gs), a.mass);
}

struct HalfspaceEval {
  double entropy = 0.0;
  double slice = 0.0;  // dx^(d-1) sum T00 on the cut plane (0 on fast path)
};

// Core quadrature given the energy density of data already aligned so the
// cut sits on grid plane j (or an arbitrary cut on the smooth fast path).
HalfspaceEval halfspace_from_density(const Field& t00, int axis, double cut,
                                     Side side, bool fast, int plane,
                                     const Field* slice2_field) {
  HalfspaceEval out;
  const GridSpec& g = t00.grid;
  out.entropy = 2.0 * M_PI * weighted_sum(t00, axis, cut, side);
  if (fast) return out;
  out.slice = slice_sum(t00, axis, plane);
  const double dx = g.dx();
  double corr = dx * dx / 12.0 * out.slice;
  if (slice2_field) corr -= dx * dx * dx * dx / 240.0 * slice_sum(*slice2_field, axis, plane);
  out.entropy += 2.0 * M_PI * corr;
  return out;
}

// Shared driver: aligns when needed, produces entropy, slice integral and
// (optionally) the improved-route pieces from the same shifted data.
struct HalfspaceContext {
  CauchyData aligned;   // valid only when shifted
  const CauchyData* use = nullptr;
  bool fast = false;
  int plane = 0;
  double cut = 0.0;
};

HalfspaceContext make_context(const CauchyData& a, int axis, double cut,
                              const Field* t00_hint) {
  HalfspaceContext ctx;
  ctx.cut = cut;
  Field tmp;
  if (!t00_hint) {
    tmp = energy_density(a);
    t00_hint = &tmp;
  }
  const Field& probe = *t00_hint;
  if (plane_neighbourhood_empty(probe, axis, cut)) {
    ctx.fast = true;
    ctx.use = &a;
    return ctx;
  }
  const GridSpec& g = a.grid();
  const int j = aligned_plane(g, cut);
  const double delta = cut - g.coord(j);
  if (std::abs(delta) > 1e-13 * std::max(1.0, g.half_extent)) {
    ctx.aligned = shift_data(a, axis, delta);
    ctx.use = &ctx.aligned;
  } else {
    ctx.use = &a;
  }
  ctx.plane = j;
  ctx.cut = g.coord(j);
  return ctx;
}

Field axis_second_derivative(const Field& F, int axis) {
  return fft::backward(fft::derivative(fft::derivative(fft::forward(F), axis), axis));
}

}  // namespace

double halfspace_entropy(const CauchyData& a, int axis, double cut, Side side,
                         const Field* precomputed_t00) {
  HalfspaceContext ctx = make_context(a, axis, cut, precomputed_t00);
  Field t00 = (ctx.fast && precomputed_t00) ? *precomputed_t00
                                            : energy_density(*ctx.use);
  if (ctx.fast)
    return halfspace_from_density(t00, axis, ctx.cut, side, true, 0, nullptr).entropy;
  Field t2 = axis_second_derivative(t00, axis);
  return halfspace_from_density(t00, axis, ctx.cut, side, false, ctx.plane, &t2).entropy;
}

double halfspace_entropy_improved(const CauchyData& a, double cut, int axis) {
  HalfspaceContext ctx = make_context(a, axis, cut, nullptr);
  const CauchyData& d = *ctx.use;
  EnergyDensity ed = stress_energy(d);
  const GridSpec& g = d.grid();
  const double D = (g.d - 1) / 2.0;

  double volume_term, boundary_term = 0.0;
  if (ctx.fast) {
    volume_term = halfspace_from_density(ed.t00i, axis, ctx.cut, Side::Greater,
                                         true, 0, nullptr).entropy;
    // No f-mass near the plane: the boundary slice vanishes with it.
  } else {
    Field t2 = axis_second_derivative(ed.t00i, axis);
    volume_term = halfspace_from_density(ed.t00i, axis, ctx.cut, Side::Greater,
                                         false, ctx.plane, &t2).entropy;
    Field f2(g);
    for (std::int64_t i = 0; i < f2.size(); ++i) f2.v[i] = d.f.v[i] * d.f.v[i];
    boundary_term = M_PI * D / g.d * slice_sum(f2, axis, ctx.plane);
  }
  return volume_term + boundary_term;
}

double ball_entropy_massless(const CauchyData& a, const Region& ball) {
  if (a.mass != 0.0) throw MassNotZero("ball_entropy_massless: m must be 0");
  if (ball.kind != Region::Kind::Ball)
    throw Error("ball_entropy_massless: region must be a ball");
  const GridSpec& g = a.grid();
  if (g.d < 2) throw BadField("ball_entropy_massless: d >= 2 required");
  ball.require_inside(g);

  Field t00 = energy_density(a);
  const double R = ball.radius;
  double weighted = 0.0;
  for (std::int64_t i = 0; i < t00.size(); ++i) {
    const auto x = t00.point(i);
    double r2 = 0.0;
    for (int ax = 0; ax < g.d; ++ax)
      r2 += (x[ax] - ball.center[ax]) * (x[ax] - ball.center[ax]);
    const double w = 1.0 - r2 / (R * R);
    if (w > 0.0) weighted += w * t00.v[i];
  }
  weighted *= g.cell_volume();

  Field f2(g);
  for (std::int64_t i = 0; i < f2.size(); ++i) f2.v[i] = a.f.v[i] * a.f.v[i];
  const double D = (g.d - 1) / 2.0;
  return M_PI * R * weighted + M_PI * D / R * integrate_region(ball, f2);
}

std::vector<CutProfile> qdec_profile(const CauchyData& a, int axis,
                                     const std::vector<double>& cuts) {
  std::vector<CutProfile> rows;
  rows.reserve(cuts.size());
  Field t00 = energy_density(a);
  for (double cut : cuts) {
    CutProfile row;
    row.cut = cut;
    HalfspaceContext ctx = make_context(a, axis, cut, &t00);
    if (ctx.fast) {
      row.entropy =
          halfspace_from_density(t00, axis, ctx.cut, Side::Greater, true, 0, nullptr)
              .entropy;
      row.slice_integral = 0.0;
    } else {
      Field local_t00 = (ctx.use == &a) ? t00 : energy_density(*ctx.use);
      Field t2 = axis_second_derivative(local_t00, axis);
      HalfspaceEval ev = halfspace_from_density(local_t00, axis, ctx.cut,
                                                Side::Greater, false, ctx.plane, &t2);
      row.entropy = ev.entropy;
      row.slice_integral = 2.0 * M_PI * ev.slice;
    }
    rows.push_back(row);
  }
  return rows;
}

double wedge_entropy(const CauchyData& a, const WedgeVertex& v, Side side) {
  if (a.grid().d != 1) throw BadField("wedge_entropy: 1+1 setting requires d = 1");
  if (!(a.mass > 0.0)) throw BadField("wedge_entropy: m > 0 required");
  if (v.x0 == 0.0) return halfspace_entropy(a, 0, v.x1, side);
  return halfspace_entropy(evolve(a, v.x0), 0, v.x1, side);
}

BalanceResult entropy_balance_residual(const CauchyData& a, const WedgeVertex& x,
                                       const WedgeVertex& y) {
  const double E = total_energy(a);
  const double P1 = momentum_form(a, 0);

  auto both_sides = [&](const WedgeVertex& v) -> std::pair<double, double> {
    CauchyData at_time = (v.x0 == 0.0) ? a : evolve(a, v.x0);
    Field t00 = energy_density(at_time);
    const double sp = halfspace_entropy(at_time, 0, v.x1, Side::Greater, &t00);
    const double sm = halfspace_entropy(at_time, 0, v.x1, Side::Less, &t00);
    return {sp, sm};
  };
  auto [sx, sbx] = both_sides(x);
  auto [sy, sby] = both_sides(y);

  BalanceResult out;
  out.residual = (sx - sy) - (sbx - sby) - 2.0 * M_PI * (y.x1 - x.x1) * E -
                 2.0 * M_PI * (y.x0 - x.x0) * P1;
  out.scale = 2.0 * M_PI * E * (1.0 + std::abs(y.x1 - x.x1) + std::abs(y.x0 - x.x0));
  return out;
}

double wedge_convexity_gap(const CauchyData& a, const WedgeVertex& x,
                           const std::array<double, 2>& r,
                           const std::array<double, 2>& s) {
  auto spacelike_right = [](const std::array<double, 2>& v) {
    return v[1] >= std::abs(v[0]);
  };
  if (!spacelike_right(r) || !spacelike_right(s))
    throw NotSpacelikeRight("wedge_convexity_gap: r, s must be spacelike right");
  auto S = [&](double t, double p) {
    return wedge_entropy(a, WedgeVertex{t, p});
  };
  return S(x.x0 + r[0] + s[0], x.x1 + r[1] + s[1]) + S(x.x0, x.x1) -
         S(x.x0 + r[0], x.x1 + r[1]) - S(x.x0 + s[0], x.x1 + s[1]);
}

}  // namespace wavent
