#include "wavent/random_fields.hpp"

#include <cmath>

namespace wavent {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::for_sample(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index + 0x51ed2701)));
}

double Bump::value(const std::array<double, 3>& x, int d) const {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
  const double w2 = width * width;
  if (r2 >= w2) return 0.0;
  return amplitude * std::exp(w2 / (r2 - w2));
}

double Bump::derivative(const std::array<double, 3>& x, int d, int axis) const {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
  const double w2 = width * width;
  if (r2 >= w2) return 0.0;
  const double den = r2 - w2;
  return amplitude * std::exp(w2 / den) * (-w2 * 2.0 * (x[axis] - center[axis])) /
         (den * den);
}

namespace {

std::vector<Bump> draw_bumps(const GridSpec& g, Rng& rng, const BumpFieldOptions& opt) {
  const double L = g.half_extent;
  Region support = opt.support.value_or(Region::box(
      {-0.6 * L, -0.6 * L, -0.6 * L}, {0.6 * L, 0.6 * L, 0.6 * L}));
  double extent;
  if (support.kind == Region::Kind::Ball) {
    extent = 2.0 * support.radius;
  } else {
    extent = support.hi[0] - support.lo[0];
    for (int a = 1; a < g.d; ++a) extent = std::min(extent, support.hi[a] - support.lo[a]);
  }
  // Largest width that can still fit with its full support inside.
  const double wfit = (support.kind == Region::Kind::Ball)
                          ? 0.95 * support.radius
                          : 0.475 * extent;
  const double wmin = std::max(opt.min_width_cells * g.dx(), 0.08 * extent);
  const double wmax = std::min(std::max(wmin * 1.2, 0.25 * extent), wfit);
  if (wmin > wmax)
    throw BadField("random bumps: support region too small for a resolvable bump");

  const int nb = rng.uniform_int(opt.min_bumps, opt.max_bumps);
  std::vector<Bump> bumps;
  std::array<double, 3> blo{-0.6 * L, -0.6 * L, -0.6 * L};
  std::array<double, 3> bhi{0.6 * L, 0.6 * L, 0.6 * L};
  if (support.kind == Region::Kind::Ball) {
    for (int a = 0; a < g.d; ++a) {
      blo[a] = support.center[a] - support.radius;
      bhi[a] = support.center[a] + support.radius;
    }
  } else if (support.kind == Region::Kind::Box) {
    blo = support.lo;
    bhi = support.hi;
  }
  for (int b = 0; b < nb; ++b) {
    Bump bp;
    bp.width = rng.uniform(wmin, wmax);
    if (support.kind == Region::Kind::Ball) {
      // Centre uniform in the ball of radius R - w (cube rejection, which
      // accepts with probability >= pi/6 per try).
      const double room = support.radius - bp.width;
      while (true) {
        double r2 = 0.0;
        for (int a = 0; a < g.d; ++a) {
          const double off = rng.uniform(-room, room);
          bp.center[a] = support.center[a] + off;
          r2 += off * off;
        }
        if (r2 <= room * room) break;
      }
    } else {
      for (int a = 0; a < g.d; ++a)
        bp.center[a] = rng.uniform(blo[a] + bp.width, bhi[a] - bp.width);
    }
    bp.amplitude = rng.uniform(-1.0, 1.0);
    bumps.push_back(bp);
  }
  return bumps;
}

// Accumulate fn(point) over the bounding box of a bump only.
template <class F>
void for_bump_box(Field& f, const Bump& b, F&& fn) {
  const GridSpec& g = f.grid;
  int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (int a = 0; a < g.d; ++a) {
    lo[a] = std::max(0, static_cast<int>(std::floor(
                            (b.center[a] - b.width + g.half_extent) / g.dx())));
    hi[a] = std::min(g.n - 1, static_cast<int>(std::ceil(
                                  (b.center[a] + b.width + g.half_extent) / g.dx())));
  }
  std::array<int, 3> k{0, 0, 0};
  for (k[0] = lo[0]; k[0] <= hi[0]; ++k[0]) {
    if (g.d == 1) {
      fn(f.index(k));
      continue;
    }
    for (k[1] = lo[1]; k[1] <= hi[1]; ++k[1]) {
      if (g.d == 2) {
        fn(f.index(k));
        continue;
      }
      for (k[2] = lo[2]; k[2] <= hi[2]; ++k[2]) fn(f.index(k));
    }
  }
}

void add_bump(Field& f, const Bump& b) {
  for_bump_box(f, b, [&](std::int64_t i) { f.v[i] += b.value(f.point(i), f.grid.d); });
}

void add_bump_derivative(Field& f, const Bump& b, int axis) {
  for_bump_box(f, b,
               [&](std::int64_t i) { f.v[i] += b.derivative(f.point(i), f.grid.d, axis); });
}

}  // namespace

Field random_bump_field(const GridSpec& g, Rng& rng, const BumpFieldOptions& opt) {
  Field f(g);
  for (const Bump& b : draw_bumps(g, rng, opt)) add_bump(f, b);
  return f;
}

CauchyData random_cauchy(const GridSpec& g, double m, std::uint64_t seed,
                         const BumpFieldOptions& opt) {
  Rng rng(seed);
  Field f = random_bump_field(g, rng, opt);
  Field gg(g);
  if (m == 0.0) {
    // Derivative bumps: compactly supported with exactly vanishing mean, as
    // required of massless g components.
    for (const Bump& b : draw_bumps(g, rng, opt)) {
      const int axis = rng.uniform_int(0, g.d - 1);
      add_bump_derivative(gg, b, axis);
    }
    // Normalise the derivative scale to the bump scale.
    double mx = 0.0;
    for (double v : gg.v) mx = std::max(mx, std::abs(v));
    if (mx > 0.0)
      for (double& v : gg.v) v /= mx;
  } else {
    gg = random_bump_field(g, rng, opt);
  }
  return CauchyData(std::move(f), std::move(gg), m);
}

}  // namespace wavent
