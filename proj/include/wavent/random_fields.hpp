#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "wavent/cauchy.hpp"
#include "wavent/region.hpp"

namespace wavent {

// Deterministic RNG: mt19937_64 with an explicit 53-bit uniform mapping, so
// streams are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t raw() { return eng_(); }

  // Stream for sample `index` of a sweep: order-independent, so results do
  // not depend on the thread schedule.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
};

// One compactly supported mollifier bump A exp(w^2 / (|x-c|^2 - w^2)),
// identically zero for |x-c| >= w.
struct Bump {
  std::array<double, 3> center{0, 0, 0};
  double width = 1.0;
  double amplitude = 1.0;

  double value(const std::array<double, 3>& x, int d) const;
  double derivative(const std::array<double, 3>& x, int d, int axis) const;
};

struct BumpFieldOptions {
  int min_bumps = 3;
  int max_bumps = 8;
  // Bumps are confined to this region (with their full support); when absent,
  // to the central 60% of the box.
  std::optional<Region> support;
  // Resolvability floor in units of dx. Mollifier bumps have broad spectra;
  // below ~24 cells their gradients leak measurable mass past the Nyquist
  // band and the decay and cross-route identities degrade.
  double min_width_cells = 24.0;
};

// Superposition of seeded bumps; exactly zero outside the union of supports.
Field random_bump_field(const GridSpec& g, Rng& rng, const BumpFieldOptions& opt = {});

// Seeded Cauchy data. For m = 0 the g component is built from analytic bump
// derivatives, so its zero mode vanishes identically.
CauchyData random_cauchy(const GridSpec& g, double m, std::uint64_t seed,
                         const BumpFieldOptions& opt = {});

}  // namespace wavent
