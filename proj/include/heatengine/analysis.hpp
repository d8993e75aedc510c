#pragma once

#include "heatengine/engine.hpp"

namespace heatengine {

/// Subsystem energy bookkeeping against the local Zeeman Hamiltonians
/// H^i(B) = 2B Sz_i (the coupling term is attributed to neither side).
struct LocalWorkResult {
    double q_a1 = 0.0, q_a2 = 0.0;
    double q_b1 = 0.0, q_b2 = 0.0;
    double w_a = 0.0;  // -(q_a1 + q_a2)
    double w_b = 0.0;  // -(q_b1 + q_b2)
    double w_total_local = 0.0;
    double w_global = 0.0;  // wt of the same cycle, for comparison
};

LocalWorkResult local_works(const CyclePoint& p);

/// Effective cold-bath reading of the measurement stroke: t2 solves
/// E(T) - E(t2) = qm for the thermal energy E(T') at field B2; cop is
/// qm/(-wt) when the cycle consumes work. Either can be absent.
struct RefrigeratorResult {
    std::optional<double> t2;
    std::optional<double> cop;
};

RefrigeratorResult effective_cold_temperature(const CyclePoint& p);

std::optional<double> coefficient_of_performance(const CycleResult& r);

}  // namespace heatengine
