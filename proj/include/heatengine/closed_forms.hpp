#pragma once

#include <string>
#include <vector>

#include "heatengine/errors.hpp"

namespace heatengine {

/// Analytic expressions for the spin-1/2 pair engine (suffix _hh), the
/// (1/2, 1) pair (_h1) and the (1, 1) pair (_11), all at kT = 1. These
/// are independent scalar oracles for the numerical cycle.
enum class ClosedFormId {
    w1_hh,
    qm_xz_hh,
    qm_xy_hh,
    w2_xz_hh,
    qt_xz_hh,
    wt_xz_hh,
    eta_xz_hh,
    eta_xy_hh,
    eta_xx_hh,
    advantage_factor_hh,
    wt_h1,
    wt_11,
    threshold_h1,
};

const std::vector<ClosedFormId>& all_closed_form_ids();
std::string to_string(ClosedFormId id);
ClosedFormId closed_form_from_string(const std::string& name);

/// Evaluates the expression at (j, b1, b2). Ratios are computed with the
/// dominant exponential factored out of numerator and denominator, so
/// large fields do not overflow.
double evaluate(ClosedFormId id, double j, double b1, double b2);

/// Coupling J* below which the spin-1/2 pair engine beats the uncoupled
/// efficiency 1 - b1/b2: J* = ln((e^{-2 b1} + e^{2 b1} + 1)/3) / 8.
double advantage_cutoff(double b1);

/// Coupling J* = ln(4 + 3 e^{2 b1})/12 where the (1/2, 1) engine's
/// extracted work changes sign for b2 > b1.
double negative_work_threshold_h1(double b1);

}  // namespace heatengine
