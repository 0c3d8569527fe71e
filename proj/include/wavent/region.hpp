#pragma once

#include <array>
#include <optional>
#include <vector>

#include "wavent/grid.hpp"

namespace wavent {

// Spatial subregion of the box: a half-space {x_axis >< a}, an axis-aligned
// box, or a ball. The half-width R is half the minimal distance between two
// parallel hyperplanes enclosing the region (infinite for a half-space).
struct Region {
  enum class Kind { HalfSpace, Box, Ball };

  Kind kind = Kind::Ball;
  // HalfSpace
  int axis = 0;
  double cut = 0.0;
  bool greater = true;
  // Box
  std::array<double, 3> lo{0, 0, 0};
  std::array<double, 3> hi{0, 0, 0};
  // Ball
  std::array<double, 3> center{0, 0, 0};
  double radius = 1.0;

  static Region half_space(int axis, double cut, bool greater);
  static Region box(const std::array<double, 3>& lo, const std::array<double, 3>& hi);
  static Region ball(const std::array<double, 3>& center, double radius);

  // Half-width R; throws for half-spaces (R = infinity).
  double half_width(int d) const;
  // Axis along which the minimal enclosing strip lies, and its [lo, hi].
  int strip_axis(int d) const;
  std::pair<double, double> strip_interval(int d) const;

  bool contains(const std::array<double, 3>& x, int d) const;
  // Must fit inside the grid box with margin >= 2 dx; RegionOutsideGrid
  // otherwise.
  void require_inside(const GridSpec& g) const;
};

// Fraction of the grid cell centred at flat index i lying inside the region.
// Boxes and half-spaces are exact; balls subsample boundary cells.
double cell_fraction(const Region& r, const Field& f, std::int64_t i);

// sum_i w_i q_i dx^d with w_i the sub-cell fraction.
double integrate_region(const Region& r, const Field& q);

// Midpoint/product quadrature points and weights on the region boundary
// (d = 1: the two endpoints with weight 1; d = 2: circle; d = 3: sphere).
struct SurfaceQuadrature {
  std::vector<std::array<double, 3>> points;
  std::vector<std::array<double, 3>> normals;
  std::vector<double> weights;
};
SurfaceQuadrature ball_surface(const Region& r, const GridSpec& g);

// \oint q dsigma over the ball boundary via interpolation of q.
double surface_integral(const Region& r, const Field& q);

}  // namespace wavent
