#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "heatengine/medium.hpp"

namespace heatengine {

/// A complete set of measurement operators {M_k}: sum_k M_k^dag M_k = 1.
/// The non-selective channel is rho -> sum_k M_k rho M_k^dag.
struct MeasurementScheme {
    std::vector<ComplexMatrix> operators;
    std::string label_a;
    std::string label_b;

    int dimension() const { return operators.empty() ? 0 : operators.front().rows(); }
};

struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    static Direction x() { return {M_PI / 2.0, 0.0}; }
    static Direction y() { return {M_PI / 2.0, M_PI / 2.0}; }
    static Direction z() { return {0.0, 0.0}; }
};

/// Product projective measurement: eigenprojectors of the spin component
/// along dir_a on side A tensored with those along dir_b on side B.
MeasurementScheme local_projective_scheme(const WorkingMedium& m, Direction dir_a, Direction dir_b);

/// Qubit SIC-POVM: four rank-1 effects G_k = |phi_k><phi_k| / 2 with
/// tetrahedral Bloch vectors; operators are M_k = sqrt(G_k).
MeasurementScheme qubit_sic_scheme();

/// SIC-POVM on the (spin-1/2) A side tensored with a projective
/// measurement along dir_b on the B side.
MeasurementScheme sic_with_projective_scheme(const WorkingMedium& m, Direction dir_b);

ComplexMatrix apply_nonselective(const MeasurementScheme& scheme, const ComplexMatrix& rho);

/// Heisenberg-picture image sum_k M_k^dag h M_k of an observable.
ComplexMatrix heisenberg_dual(const MeasurementScheme& scheme, const ComplexMatrix& h);

/// T[m][n] = sum_k |<psi_m|M_k|psi_n>|^2 over the given eigenbasis.
/// Symmetric and doubly stochastic for every scheme built from Hermitian
/// operators.
struct TransitionMatrix {
    int dim = 0;
    std::vector<double> entries;  // row-major
    SpectralDecomposition basis;

    double operator()(int m, int n) const { return entries[static_cast<size_t>(m) * dim + n]; }
};

TransitionMatrix transition_matrix(const MeasurementScheme& scheme, const SpectralDecomposition& basis);

/// One side of a scheme descriptor: an axis tag "x"/"y"/"z", explicit
/// angles "theta=<v>,phi=<v>", or "sic" (side A only).
struct SideSpec {
    enum class Kind { Axis, Angles, Sic } kind = Kind::Axis;
    char axis = 'z';
    double theta = 0.0;
    double phi = 0.0;

    Direction direction() const;
    std::string label() const;
    static SideSpec parse(const std::string& text);
};

/// Builds the scheme named by two side descriptors on the given medium.
MeasurementScheme make_scheme(const WorkingMedium& m, const SideSpec& side_a, const SideSpec& side_b);

}  // namespace heatengine
