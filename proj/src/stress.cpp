#include "wavent/stress.hpp"

namespace wavent {

Field energy_density(const CauchyData& a) {
  const GridSpec& g = a.grid();
  Field t00(g);
  const double m2 = a.mass * a.mass;
  SpectralField fs = fft::forward(a.f);
  for (int ax = 0; ax < g.d; ++ax) {
    Field df = fft::backward(fft::derivative(fs, ax));
    for (std::int64_t i = 0; i < t00.size(); ++i) t00.v[i] += df.v[i] * df.v[i];
  }
  for (std::int64_t i = 0; i < t00.size(); ++i) {
    const double fv = a.f.v[i], gv = a.g.v[i];
    t00.v[i] = 0.5 * (t00.v[i] + m2 * fv * fv + gv * gv);
  }
  return t00;
}

EnergyDensity stress_energy(const CauchyData& a) {
  const GridSpec& g = a.grid();
  EnergyDensity out;
  out.t00 = energy_density(a);
  Field lap_f2 = fft::laplacian_of_square(a.f);
  const double c = (g.d - 1) / (4.0 * g.d);
  out.t00i = out.t00;
  for (std::int64_t i = 0; i < lap_f2.size(); ++i) out.t00i.v[i] -= c * lap_f2.v[i];
  return out;
}

double total_energy(const CauchyData& a) { return integrate(energy_density(a)); }

}  // namespace wavent
