#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wavent/errors.hpp"

namespace wavent {

// Uniform periodic box [-L, L)^d with N points per axis, N a power of two.
// Coordinate of index k along any axis is -L + k*dx, dx = 2L/N. Fields are
// stored row-major (axis 0 slowest, axis d-1 fastest).
struct GridSpec {
  int d = 1;
  int n = 16;
  double half_extent = 1.0;

  GridSpec() = default;
  GridSpec(int d_, int n_, double L_) : d(d_), n(n_), half_extent(L_) {
    if (d < 1 || d > 3) throw BadField("GridSpec: dimension must be 1, 2 or 3");
    if (n < 16 || (n & (n - 1)) != 0)
      throw BadField("GridSpec: N must be a power of two >= 16");
    if (!(half_extent > 0.0)) throw BadField("GridSpec: L must be positive");
  }

  double dx() const { return 2.0 * half_extent / n; }
  double coord(int k) const { return -half_extent + k * dx(); }
  // Wavenumber step pi/L of the signed spectral layout p_k = pi*k/L.
  double dp() const { return M_PI / half_extent; }
  std::int64_t npoints() const {
    std::int64_t m = 1;
    for (int a = 0; a < d; ++a) m *= n;
    return m;
  }
  double cell_volume() const { return std::pow(dx(), d); }

  bool operator==(const GridSpec& o) const {
    return d == o.d && n == o.n && half_extent == o.half_extent;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

// Real scalar field sampled on a GridSpec.
struct Field {
  GridSpec grid;
  std::vector<double> v;

  Field() = default;
  explicit Field(const GridSpec& g) : grid(g), v(g.npoints(), 0.0) {}
  Field(const GridSpec& g, std::vector<double> data) : grid(g), v(std::move(data)) {
    if (static_cast<std::int64_t>(v.size()) != g.npoints())
      throw BadField("Field: payload size does not match grid");
  }

  double& operator[](std::int64_t i) { return v[i]; }
  double operator[](std::int64_t i) const { return v[i]; }
  std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }

  std::int64_t index(const std::array<int, 3>& k) const {
    std::int64_t i = 0;
    for (int a = 0; a < grid.d; ++a) i = i * grid.n + k[a];
    return i;
  }
  std::array<int, 3> unindex(std::int64_t i) const {
    std::array<int, 3> k{0, 0, 0};
    for (int a = grid.d - 1; a >= 0; --a) {
      k[a] = static_cast<int>(i % grid.n);
      i /= grid.n;
    }
    return k;
  }
  std::array<double, 3> point(std::int64_t i) const {
    auto k = unindex(i);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < grid.d; ++a) x[a] = grid.coord(k[a]);
    return x;
  }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

// Trapezoidal quadrature on the periodic grid: plain sum times cell volume.
inline double integrate(const Field& f) {
  double s = 0.0;
  for (double x : f.v) s += x;
  return s * f.grid.cell_volume();
}

inline double l2_mass(const Field& f) {
  double s = 0.0;
  for (double x : f.v) s += x * x;
  return s * f.grid.cell_volume();
}

// Fraction of the discrete L2 mass of f lying in the outermost 10% shell of
// the box (any coordinate beyond 0.9 L). Guards periodic wraparound.
double boundary_shell_fraction(const Field& f);

// Requires matching grids; throws GridMismatch otherwise.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace wavent
