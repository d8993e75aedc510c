#pragma once

#include <string>
#include <vector>

#include "heatengine/matrix.hpp"

namespace heatengine {

/// Spin quantum number, stored as 2s so half-integer spins stay exact.
struct SpinValue {
    int twice_s = 1;

    explicit SpinValue(int twice_s_) : twice_s(twice_s_) {
        if (twice_s < 1) throw std::invalid_argument("SpinValue: 2s must be >= 1");
    }

    int dimension() const { return twice_s + 1; }
    double value() const { return 0.5 * twice_s; }

    /// Parses "1/2", "1", "3/2", "2", ... ("n/2" shorthand for odd numerators).
    static SpinValue parse(const std::string& tag);
    std::string label() const;
};

/// Standard SU(2) irreducible representation: sz diagonal with entries
/// s, s-1, ..., -s; sx and sy from the ladder operators.
struct SpinOperators {
    ComplexMatrix sx, sy, sz;
};

SpinOperators spin_operators(SpinValue s);

/// Spin component along the (theta, phi) direction:
/// sin(theta)cos(phi) sx + sin(theta)sin(phi) sy + cos(theta) sz.
ComplexMatrix spin_direction_operator(SpinValue s, double theta, double phi);

struct EigenProjector {
    double eigenvalue = 0.0;
    ComplexMatrix projector;
};

/// Spectral projectors of a Hermitian operator, ascending by eigenvalue.
/// Eigenvalues closer than 1e-9 are grouped into one projector.
std::vector<EigenProjector> eigenprojectors_of(const ComplexMatrix& a);

}  // namespace heatengine
