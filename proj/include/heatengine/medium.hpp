#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "heatengine/spin.hpp"

namespace heatengine {

/// External magnetic field value, the control parameter of the cycle.
struct FieldPoint {
    double b = 0.0;
};

/// Two-spin working medium with isotropic exchange coupling J.
/// The Hamiltonian family it generates is
///   H(B) = 8J (Sx(x)Sx + Sy(x)Sy + Sz(x)Sz) + 2B (Sz(x)1 + 1(x)Sz).
struct WorkingMedium {
    SpinValue spin_a;
    SpinValue spin_b;
    double coupling_j = 0.0;
    SpinOperators ops_a;
    SpinOperators ops_b;

    WorkingMedium(SpinValue a, SpinValue b, double j)
        : spin_a(a), spin_b(b), coupling_j(j), ops_a(spin_operators(a)), ops_b(spin_operators(b)) {
        if (!std::isfinite(j)) throw std::invalid_argument("WorkingMedium: coupling must be finite");
    }

    int dimension() const { return spin_a.dimension() * spin_b.dimension(); }
};

ComplexMatrix build_hamiltonian(const WorkingMedium& m, FieldPoint b);

/// Ascending eigendecomposition of H(B). The eigenvectors are field
/// independent for this Hamiltonian family; only the sort order can
/// change across level crossings.
SpectralDecomposition spectrum(const WorkingMedium& m, FieldPoint b);

/// One analytic level c_j*J + c_b*B, with the product-basis amplitudes
/// of the published eigenstate when those survive the misprint screen
/// (unit norm and a single total magnetization per row).
struct TabulatedLevel {
    double coeff_j = 0.0;
    double coeff_b = 0.0;
    struct Amplitude {
        double value;
        int idx_a;
        int idx_b;
    };
    std::vector<Amplitude> state;
    bool state_usable = false;
};

/// Returns the published level list for one of the six tabulated spin
/// pairs (s_a <= s_b), or throws UnsupportedPair.
const std::vector<TabulatedLevel>& tabulated_levels(SpinValue a, SpinValue b);

struct TableValidationReport {
    double max_eigenvalue_deviation = 0.0;
    /// Frobenius distance between numerical and table eigenprojectors,
    /// per degenerate cluster whose published states are all usable.
    double max_subspace_deviation = 0.0;
    int clusters_checked = 0;
    int clusters_skipped = 0;
    bool passed = false;
};

TableValidationReport validate_against_table(const WorkingMedium& m, FieldPoint b, double tol = 1e-10);

}  // namespace heatengine
