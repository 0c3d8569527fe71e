#include "wavent/region.hpp"

#include <algorithm>
#include <cmath>

#include "wavent/fft.hpp"

namespace wavent {

Region Region::half_space(int axis, double cut, bool greater) {
  Region r;
  r.kind = Kind::HalfSpace;
  r.axis = axis;
  r.cut = cut;
  r.greater = greater;
  return r;
}

Region Region::box(const std::array<double, 3>& lo, const std::array<double, 3>& hi) {
  Region r;
  r.kind = Kind::Box;
  r.lo = lo;
  r.hi = hi;
  return r;
}

Region Region::ball(const std::array<double, 3>& center, double radius) {
  Region r;
  r.kind = Kind::Ball;
  r.center = center;
  r.radius = radius;
  return r;
}

double Region::half_width(int d) const {
  switch (kind) {
    case Kind::Ball:
      return radius;
    case Kind::Box: {
      double w = hi[0] - lo[0];
      for (int a = 1; a < d; ++a) w = std::min(w, hi[a] - lo[a]);
      return 0.5 * w;
    }
    default:
      throw Error("half_width: infinite for a half-space");
  }
}

int Region::strip_axis(int d) const {
  if (kind == Kind::Ball) return 0;
  if (kind == Kind::Box) {
    int best = 0;
    for (int a = 1; a < d; ++a)
      if (hi[a] - lo[a] < hi[best] - lo[best]) best = a;
    return best;
  }
  throw Error("strip_axis: not defined for a half-space");
}

std::pair<double, double> Region::strip_interval(int d) const {
  const int a = strip_axis(d);
  if (kind == Kind::Ball) return {center[a] - radius, center[a] + radius};
  return {lo[a], hi[a]};
}

bool Region::contains(const std::array<double, 3>& x, int d) const {
  switch (kind) {
    case Kind::HalfSpace:
      return greater ? x[axis] > cut : x[axis] < cut;
    case Kind::Box:
      for (int a = 0; a < d; ++a)
        if (x[a] < lo[a] || x[a] > hi[a]) return false;
      return true;
    case Kind::Ball: {
      double r2 = 0.0;
      for (int a = 0; a < d; ++a) r2 += (x[a] - center[a]) * (x[a] - center[a]);
      return r2 <= radius * radius;
    }
  }
  return false;
}

void Region::require_inside(const GridSpec& g) const {
  if (kind == Kind::HalfSpace) {
    if (std::abs(cut) > g.half_extent - 2 * g.dx())
      throw RegionOutsideGrid("half-space cut too close to the box edge");
    return;
  }
  const double margin = 2 * g.dx();
  for (int a = 0; a < g.d; ++a) {
    const double blo = (kind == Kind::Box) ? lo[a] : center[a] - radius;
    const double bhi = (kind == Kind::Box) ? hi[a] : center[a] + radius;
    if (blo < -g.half_extent + margin || bhi > g.half_extent - margin)
      throw RegionOutsideGrid("region does not fit in the grid with margin 2 dx");
  }
}

namespace {

double axis_overlap(double lo, double hi, double a, double b) {
  return std::max(0.0, std::min(hi, b) - std::max(lo, a)) / (hi - lo);
}

// Exact area (and optionally first moments) of disk((cx,cy), R) intersected
// with [x0,x1] x [y0,y1]: integrate the clipped chord over y, splitting at
// the heights where the chord meets the vertical cell edges (the integrand
// is smooth between them), with Gauss-Legendre on each piece.
double disk_rect_overlap(double cx, double cy, double R, double x0, double x1,
                         double y0, double y1, double* mx = nullptr,
                         double* my = nullptr) {
  const double ylo = std::max(y0, cy - R), yhi = std::min(y1, cy + R);
  if (ylo >= yhi) return 0.0;
  std::array<double, 6> cuts{ylo, yhi, ylo, ylo, ylo, ylo};
  int ncuts = 2;
  for (double xe : {x0, x1}) {
    const double t = R * R - (xe - cx) * (xe - cx);
    if (t > 0.0) {
      const double s = std::sqrt(t);
      for (double yc : {cy - s, cy + s})
        if (yc > ylo && yc < yhi) cuts[ncuts++] = yc;
    }
  }
  std::sort(cuts.begin(), cuts.begin() + ncuts);
  static const double gx[8] = {-0.9602898564975363, -0.7966664774136267,
                               -0.5255324099163290, -0.1834346424956498,
                               0.1834346424956498,  0.5255324099163290,
                               0.7966664774136267,  0.9602898564975363};
  static const double gw[8] = {0.1012285362903763, 0.2223810344533745,
                               0.3137066458778873, 0.3626837833783620,
                               0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  double area = 0.0, momx = 0.0, momy = 0.0;
  for (int seg = 0; seg + 1 < ncuts; ++seg) {
    const double a = cuts[seg], b = cuts[seg + 1];
    if (b - a <= 0.0) continue;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int q = 0; q < 8; ++q) {
      const double y = mid + half * gx[q];
      const double t = R * R - (y - cy) * (y - cy);
      if (t <= 0.0) continue;
      const double s = std::sqrt(t);
      const double xl = std::max(x0, cx - s), xr = std::min(x1, cx + s);
      if (xr > xl) {
        area += gw[q] * half * (xr - xl);
        momx += gw[q] * half * 0.5 * (xr * xr - xl * xl);
        momy += gw[q] * half * y * (xr - xl);
      }
    }
  }
  if (mx) *mx = momx;
  if (my) *my = momy;
  return area;
}

}  // namespace

double cell_fraction(const Region& r, const Field& f, std::int64_t i) {
  const GridSpec& g = f.grid;
  const double h = 0.5 * g.dx();
  const auto x = f.point(i);
  switch (r.kind) {
    case Region::Kind::HalfSpace: {
      const double frac = axis_overlap(x[r.axis] - h, x[r.axis] + h, r.cut,
                                       g.half_extent * 2);
      return r.greater ? frac
                       : axis_overlap(x[r.axis] - h, x[r.axis] + h,
                                      -2 * g.half_extent, r.cut);
    }
    case Region::Kind::Box: {
      double w = 1.0;
      for (int a = 0; a < g.d; ++a)
        w *= axis_overlap(x[a] - h, x[a] + h, r.lo[a], r.hi[a]);
      return w;
    }
    case Region::Kind::Ball: {
      double dist = 0.0;
      for (int a = 0; a < g.d; ++a)
        dist += (x[a] - r.center[a]) * (x[a] - r.center[a]);
      dist = std::sqrt(dist);
      const double halfdiag = h * std::sqrt(static_cast<double>(g.d));
      if (dist <= r.radius - halfdiag) return 1.0;
      if (dist >= r.radius + halfdiag) return 0.0;
      if (g.d == 1) {
        const double lo = r.center[0] - r.radius, hi = r.center[0] + r.radius;
        return axis_overlap(x[0] - h, x[0] + h, lo, hi);
      }
      if (g.d == 2)
        return disk_rect_overlap(r.center[0], r.center[1], r.radius, x[0] - h,
                                 x[0] + h, x[1] - h, x[1] + h) /
               (4.0 * h * h);
      // d = 3: subsample the indicator over the straddling cell.
      const int ns = 6;
      const double step = g.dx() / ns;
      int count = 0;
      const int total = ns * ns * ns;
      for (int t = 0; t < total; ++t) {
        int rest = t;
        std::array<double, 3> y = x;
        for (int a = 0; a < 3; ++a) {
          const int o = rest % ns;
          rest /= ns;
          y[a] = x[a] - h + (o + 0.5) * step;
        }
        double d2 = 0.0;
        for (int a = 0; a < 3; ++a)
          d2 += (y[a] - r.center[a]) * (y[a] - r.center[a]);
        if (d2 <= r.radius * r.radius) ++count;
      }
      return static_cast<double>(count) / total;
    }
  }
  return 0.0;
}

double integrate_region(const Region& r, const Field& q) {
  const GridSpec& g = q.grid;
  const double h = 0.5 * g.dx();
  double acc = 0.0;
  for (std::int64_t i = 0; i < q.size(); ++i) {
    const double w = cell_fraction(r, q, i);
    if (w <= 0.0) continue;
    if (w >= 1.0) {
      acc += q.v[i];
      continue;
    }
    // Boundary cell: sample at the centroid of the covered part instead of
    // the cell centre (one order better on the boundary band).
    auto x = q.point(i);
    std::array<double, 3> c = x;
    if (r.kind == Region::Kind::Ball && g.d == 2) {
      double mx = 0.0, my = 0.0;
      const double area =
          disk_rect_overlap(r.center[0], r.center[1], r.radius, x[0] - h,
                            x[0] + h, x[1] - h, x[1] + h, &mx, &my);
      if (area > 0.0) {
        c[0] = mx / area;
        c[1] = my / area;
      }
    } else if (r.kind == Region::Kind::Box || r.kind == Region::Kind::HalfSpace) {
      for (int a = 0; a < g.d; ++a) {
        double lo = x[a] - h, hi = x[a] + h;
        if (r.kind == Region::Kind::Box) {
          lo = std::max(lo, r.lo[a]);
          hi = std::min(hi, r.hi[a]);
        } else if (a == r.axis) {
          if (r.greater)
            lo = std::max(lo, r.cut);
          else
            hi = std::min(hi, r.cut);
        }
        if (hi > lo) c[a] = 0.5 * (lo + hi);
      }
    }
    acc += w * interpolate6(q, c);
  }
  return acc * q.grid.cell_volume();
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        break;
      }
    }
  }
}

}  // namespace

SurfaceQuadrature ball_surface(const Region& r, const GridSpec& g) {
  if (r.kind != Region::Kind::Ball) throw Error("ball_surface: region is not a ball");
  SurfaceQuadrature q;
  const double R = r.radius;
  if (g.d == 1) {
    q.points = {{r.center[0] - R, 0, 0}, {r.center[0] + R, 0, 0}};
    q.normals = {{-1, 0, 0}, {1, 0, 0}};
    q.weights = {1.0, 1.0};
    return q;
  }
  if (g.d == 2) {
    const int m = std::max<int>(64, 2 * static_cast<int>(std::ceil(2 * M_PI * R / g.dx())));
    const double dth = 2 * M_PI / m;
    for (int j = 0; j < m; ++j) {
      const double th = (j + 0.5) * dth;
      const double c = std::cos(th), s = std::sin(th);
      q.points.push_back({r.center[0] + R * c, r.center[1] + R * s, 0});
      q.normals.push_back({c, s, 0});
      q.weights.push_back(R * dth);
    }
    return q;
  }
  const int nt = std::max<int>(24, static_cast<int>(std::ceil(M_PI * R / g.dx())));
  const int np = 2 * nt;
  std::vector<double> mu, wmu;
  gauss_legendre(nt, mu, wmu);
  const double dphi = 2 * M_PI / np;
  for (int i = 0; i < nt; ++i) {
    const double st = std::sqrt(std::max(0.0, 1.0 - mu[i] * mu[i]));
    for (int j = 0; j < np; ++j) {
      const double phi = (j + 0.5) * dphi;
      const std::array<double, 3> n{st * std::cos(phi), st * std::sin(phi), mu[i]};
      q.points.push_back({r.center[0] + R * n[0], r.center[1] + R * n[1],
                          r.center[2] + R * n[2]});
      q.normals.push_back(n);
      q.weights.push_back(R * R * wmu[i] * dphi);
    }
  }
  return q;
}

double surface_integral(const Region& r, const Field& q) {
  const SurfaceQuadrature sq = ball_surface(r, q.grid);
  double acc = 0.0;
  for (std::size_t i = 0; i < sq.points.size(); ++i)
    acc += sq.weights[i] * interpolate6(q, sq.points[i]);
  return acc;
}

}  // namespace wavent
