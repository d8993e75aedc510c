#pragma once

#include <optional>

#include "heatengine/measurement.hpp"
#include "heatengine/thermal.hpp"

namespace heatengine {

/// One parameter point of the four-stroke cycle: thermalize at B1,
/// quasi-static ramp to B2, non-selective measurement at fixed B2,
/// ramp back to B1, re-thermalize.
struct CyclePoint {
    WorkingMedium medium;
    FieldPoint b1;
    FieldPoint b2;
    double beta = 1.0;
    MeasurementScheme scheme;
};

struct CycleResult {
    double w1 = 0.0;  // energy gained over the first ramp
    double w2 = 0.0;  // energy gained over the return ramp
    double wt = 0.0;  // extracted work, -(w1 + w2)
    double qm = 0.0;  // energy absorbed in the measurement stroke
    double qt = 0.0;  // energy released to the bath
    /// wt/qm; empty when qm <= 1e-12 (e.g. a scheme commuting with H).
    std::optional<double> eta;
    TransitionMatrix transition;
    std::vector<double> post_probs;
};

CycleResult run_cycle(const CyclePoint& p);

/// Pairwise terms W[m][n] = (1/2)(gap_f - gap_i) T[m][n] (P_m - P_n)
/// whose full sum reproduces w1 + w2. Symmetric by construction.
struct WorkDecomposition {
    int dim = 0;
    std::vector<double> terms;    // row-major W[m][n]
    std::vector<double> delta_i;  // E_m(B1) - E_n(B1)
    std::vector<double> delta_f;  // E_m(B2) - E_n(B2)

    double term(int m, int n) const { return terms[static_cast<size_t>(m) * dim + n]; }
    double total() const;
};

WorkDecomposition work_decomposition(const CyclePoint& p);

struct SymmetrizedEnergetics {
    double qm_sym = 0.0;
    double qt_sym = 0.0;
    /// Matches w1 + w2 (so -wt) from run_cycle.
    double w_sym = 0.0;
};

/// The eigenbasis double-sum forms of the three energetic quantities;
/// a verification surface for the trace-based values in run_cycle.
SymmetrizedEnergetics symmetrized_energetics(const CyclePoint& p);

}  // namespace heatengine
