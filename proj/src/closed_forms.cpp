#include "heatengine/closed_forms.hpp"

#include <algorithm>
#include <cmath>

namespace heatengine {

namespace {

/// Sum of c_i * exp(a_i) terms kept in symbolic form until evaluation,
/// so ratios can be computed after dividing out the largest exponential.
class ExpSum {
public:
    ExpSum() = default;
    ExpSum(double coef, double expo) { terms_.push_back({coef, expo}); }

    static ExpSum constant(double c) { return ExpSum(c, 0.0); }

    ExpSum& operator+=(const ExpSum& o) {
        terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
        return *this;
    }
    friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum& b) {
        for (const auto& t : b.terms_) a.terms_.push_back({-t.coef, t.expo});
        return a;
    }
    friend ExpSum operator*(const ExpSum& a, const ExpSum& b) {
        ExpSum r;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) r.terms_.push_back({ta.coef * tb.coef, ta.expo + tb.expo});
        return r;
    }
    friend ExpSum operator*(double s, ExpSum a) {
        for (auto& t : a.terms_) t.coef *= s;
        return a;
    }

    /// value = mantissa * exp(shift), with shift the largest exponent.
    std::pair<double, double> scaled() const {
        if (terms_.empty()) return {0.0, 0.0};
        double shift = terms_.front().expo;
        for (const auto& t : terms_) shift = std::max(shift, t.expo);
        double m = 0.0;
        for (const auto& t : terms_) m += t.coef * std::exp(t.expo - shift);
        return {m, shift};
    }

    double value() const {
        const auto [m, s] = scaled();
        return m * std::exp(s);
    }

private:
    struct Term {
        double coef;
        double expo;
    };
    std::vector<Term> terms_;
};

double ratio(const ExpSum& num, const ExpSum& den) {
    const auto [mn, sn] = num.scaled();
    const auto [md, sd] = den.scaled();
    return (mn / md) * std::exp(sn - sd);
}

ExpSum e(double expo) { return ExpSum(1.0, expo); }
ExpSum c(double coef) { return ExpSum::constant(coef); }

// 1 + e^{2b1}(1 + e^{2b1} + e^{8j}); the common spin-1/2 pair denominator.
ExpSum denom_hh(double j, double b1) { return c(1) + e(2 * b1) + e(4 * b1) + e(2 * b1 + 8 * j); }

// 1 + e^{2b1}(1 + e^{2b1} - 3 e^{8j}); the coupling bracket of the
// measurement-stroke heat.
ExpSum bracket_hh(double j, double b1) { return c(1) + e(2 * b1) + e(4 * b1) - 3.0 * e(2 * b1 + 8 * j); }

ExpSum wt_num_hh(double b1, double b2) { return (b1 - b2) * (c(1) - e(4 * b1)); }

ExpSum qm_num_xz(double j, double b1, double b2) {
    return b2 * (e(4 * b1) - c(1)) - 2.0 * j * bracket_hh(j, b1);
}

}  // namespace

const std::vector<ClosedFormId>& all_closed_form_ids() {
    static const std::vector<ClosedFormId> ids = {
        ClosedFormId::w1_hh,     ClosedFormId::qm_xz_hh, ClosedFormId::qm_xy_hh,
        ClosedFormId::w2_xz_hh,  ClosedFormId::qt_xz_hh, ClosedFormId::wt_xz_hh,
        ClosedFormId::eta_xz_hh, ClosedFormId::eta_xy_hh, ClosedFormId::eta_xx_hh,
        ClosedFormId::advantage_factor_hh, ClosedFormId::wt_h1, ClosedFormId::wt_11,
        ClosedFormId::threshold_h1,
    };
    return ids;
}

std::string to_string(ClosedFormId id) {
    switch (id) {
        case ClosedFormId::w1_hh: return "w1_hh";
        case ClosedFormId::qm_xz_hh: return "qm_xz_hh";
        case ClosedFormId::qm_xy_hh: return "qm_xy_hh";
        case ClosedFormId::w2_xz_hh: return "w2_xz_hh";
        case ClosedFormId::qt_xz_hh: return "qt_xz_hh";
        case ClosedFormId::wt_xz_hh: return "wt_xz_hh";
        case ClosedFormId::eta_xz_hh: return "eta_xz_hh";
        case ClosedFormId::eta_xy_hh: return "eta_xy_hh";
        case ClosedFormId::eta_xx_hh: return "eta_xx_hh";
        case ClosedFormId::advantage_factor_hh: return "advantage_factor_hh";
        case ClosedFormId::wt_h1: return "wt_h1";
        case ClosedFormId::wt_11: return "wt_11";
        case ClosedFormId::threshold_h1: return "threshold_h1";
    }
    throw UnknownIdError("unknown closed-form id");
}

ClosedFormId closed_form_from_string(const std::string& name) {
    for (ClosedFormId id : all_closed_form_ids())
        if (to_string(id) == name) return id;
    throw UnknownIdError("unknown closed-form id '" + name + "'");
}

double evaluate(ClosedFormId id, double j, double b1, double b2) {
    switch (id) {
        case ClosedFormId::w1_hh:
            return ratio(2.0 * ((b1 - b2) * (e(4 * b1) - c(1))), denom_hh(j, b1));
        case ClosedFormId::qm_xz_hh:
            return ratio(qm_num_xz(j, b1, b2), denom_hh(j, b1));
        case ClosedFormId::qm_xy_hh:
            return ratio(2.0 * (b2 * (e(4 * b1) - c(1))) - 2.0 * j * bracket_hh(j, b1), denom_hh(j, b1));
        case ClosedFormId::w2_xz_hh:
            return ratio(wt_num_hh(b1, b2), denom_hh(j, b1));
        case ClosedFormId::qt_xz_hh:
            return -6.0 * j +
                   ratio(b1 * (c(1) - e(4 * b1)) + 8.0 * j * (c(1) + e(2 * b1) + e(4 * b1)), denom_hh(j, b1));
        case ClosedFormId::wt_xz_hh:
            return ratio(wt_num_hh(b1, b2), denom_hh(j, b1));
        case ClosedFormId::eta_xz_hh:
            return ratio(wt_num_hh(b1, b2), qm_num_xz(j, b1, b2));
        case ClosedFormId::eta_xy_hh:
            return ratio(wt_num_hh(b1, b2), b2 * (e(4 * b1) - c(1)) - 1.0 * j * bracket_hh(j, b1));
        case ClosedFormId::eta_xx_hh:
            return ratio((b1 - b2) * (e(4 * b1) - c(1)),
                         b2 * (c(1) - e(4 * b1)) + j * (c(1) + e(4 * b1) - 2.0 * e(2 * b1 + 8 * j)));
        case ClosedFormId::advantage_factor_hh:
            return (1.0 - b1 / b2) * ratio(e(4 * b1) - c(1),
                                           e(4 * b1) - c(1) - (2.0 * j / b2) * bracket_hh(j, b1));
        case ClosedFormId::wt_h1: {
            const ExpSum num = (b2 - b1) * ((e(2 * b1) - c(1)) *
                                            (c(3) + e(2 * b1) * (c(4) + 3.0 * e(2 * b1) - e(12 * j))));
            const ExpSum den = 3.0 * ((c(1) + e(2 * b1)) * (c(1) + e(4 * b1) + e(2 * (b1 + 6 * j))));
            return ratio(num, den);
        }
        case ClosedFormId::wt_11: {
            const ExpSum num = (b2 - b1) * ((e(4 * b1) - c(1)) *
                                            (c(2) + e(2 * b1) + 2.0 * e(4 * b1) + e(2 * (b1 + 8 * j))));
            const ExpSum den = c(1) + e(2 * b1) + e(4 * b1) + e(6 * b1) + e(8 * b1) + e(4 * (b1 + 6 * j)) +
                               e(2 * (b1 + 8 * j)) * (c(1) + e(2 * b1) + e(4 * b1));
            return ratio(num, den);
        }
        case ClosedFormId::threshold_h1:
            return (c(4) + 3.0 * e(2 * b1) - e(12 * j)).value();
    }
    throw UnknownIdError("unknown closed-form id");
}

double advantage_cutoff(double b1) {
    // ln((e^{-2 b1} + e^{2 b1} + 1)/3)/8, with the dominant exponential
    // factored out of the logarithm.
    const double m = std::max({-2.0 * b1, 2.0 * b1, 0.0});
    const double rest = std::exp(-2.0 * b1 - m) + std::exp(2.0 * b1 - m) + std::exp(-m);
    return (m + std::log(rest) - std::log(3.0)) / 8.0;
}

double negative_work_threshold_h1(double b1) {
    const double m = std::max(2.0 * b1, 0.0);
    return (m + std::log(4.0 * std::exp(-m) + 3.0 * std::exp(2.0 * b1 - m))) / 12.0;
}

}  // namespace heatengine
