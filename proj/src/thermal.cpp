#include "heatengine/thermal.hpp"

#include <cmath>

namespace heatengine {

ThermalState gibbs_state(const ComplexMatrix& h, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidBetaError("gibbs_state: beta must be finite and positive");
    const SpectralDecomposition sd = hermitian_eigendecompose(h);
    const int n = sd.dimension();

    const double e_min = sd.eigenvalues.front();
    std::vector<double> w(static_cast<size_t>(n));
    double z_shifted = 0.0;
    for (int k = 0; k < n; ++k) {
        w[static_cast<size_t>(k)] = std::exp(-beta * (sd.eigenvalues[static_cast<size_t>(k)] - e_min));
        z_shifted += w[static_cast<size_t>(k)];
    }

    ThermalState ts;
    ts.beta = beta;
    ts.partition_z = std::exp(-beta * e_min + std::log(z_shifted));
    ts.density = ComplexMatrix(n, n);
    const ComplexMatrix& v = sd.eigenvectors;
    for (int k = 0; k < n; ++k) {
        const double p = w[static_cast<size_t>(k)] / z_shifted;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ts.density(i, j) += p * v(i, k) * std::conj(v(j, k));
    }
    return ts;
}

std::vector<double> occupation_probabilities(const ThermalState& ts, const SpectralDecomposition& sd) {
    const int n = sd.dimension();
    if (ts.density.rows() != n) throw DimensionMismatchError("occupation_probabilities: dimensions differ");
    std::vector<double> p(static_cast<size_t>(n));
    const ComplexMatrix& v = sd.eigenvectors;
    for (int k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < n; ++j) row += ts.density(i, j) * v(j, k);
            acc += std::conj(v(i, k)) * row;
        }
        p[static_cast<size_t>(k)] = acc.real();
    }
    return p;
}

}  // namespace heatengine
