#include "wavent/grid.hpp"

namespace wavent {

double boundary_shell_fraction(const Field& f) {
  const GridSpec& g = f.grid;
  const double edge = 0.9 * g.half_extent;
  double shell = 0.0, total = 0.0;
  for (std::int64_t i = 0; i < f.size(); ++i) {
    const double w = f.v[i] * f.v[i];
    total += w;
    auto k = f.unindex(i);
    for (int a = 0; a < g.d; ++a) {
      if (std::abs(g.coord(k[a])) >= edge) {
        shell += w;
        break;
      }
    }
  }
  return total > 0.0 ? shell / total : 0.0;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
  if (a != b) throw GridMismatch(std::string(where) + ": grids differ");
}

}  // namespace wavent
