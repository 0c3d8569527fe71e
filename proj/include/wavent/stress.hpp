#pragma once

#include "wavent/cauchy.hpp"

namespace wavent {

// T00 and its "improved" counterpart on the time-zero slice:
//   t00  = (|grad f|^2 + m^2 f^2 + g^2) / 2            (pointwise >= 0)
//   t00i = t00 - ((d-1)/(4d)) lap(f^2)
// The improvement term is a total Laplacian, so both integrate to the same
// total over the periodic box.
struct EnergyDensity {
  Field t00;
  Field t00i;
  GridSpec grid() const { return t00.grid; }
};

EnergyDensity stress_energy(const CauchyData& a);

// t00 only; the hot path for energy bounds.
Field energy_density(const CauchyData& a);

// \int t00 over the box; equals (Phi, P Phi).
double total_energy(const CauchyData& a);

}  // namespace wavent
