#pragma once

#include <vector>

#include "heatengine/matrix.hpp"

namespace heatengine {

/// Gibbs state exp(-beta H)/Z. Weights are computed after shifting the
/// spectrum by its minimum, so beta can be arbitrarily large without
/// overflow; partition_z is the unshifted value and may round to +inf
/// for extreme beta*|E| (none of the library paths read it).
struct ThermalState {
    ComplexMatrix density;
    double beta = 1.0;
    double partition_z = 1.0;
};

ThermalState gibbs_state(const ComplexMatrix& h, double beta);

/// Diagonal of the state in the given eigenbasis: p_n = <psi_n|rho|psi_n>.
std::vector<double> occupation_probabilities(const ThermalState& ts, const SpectralDecomposition& sd);

}  // namespace heatengine
