#include "heatengine/validate.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "heatengine/analysis.hpp"
#include "heatengine/closed_forms.hpp"

namespace heatengine {

namespace {

struct Draw {
    double j;
    double b;
};

/// Random (J, B) with every pair of table levels separated by at least
/// 1e-3, so eigenvector comparisons stay well conditioned.
std::vector<Draw> gapped_draws(SpinValue a, SpinValue b, int count, std::mt19937& rng) {
    const std::vector<TabulatedLevel>& levels = tabulated_levels(a, b);
    std::uniform_real_distribution<double> dj(0.05, 1.2);
    std::uniform_real_distribution<double> db(0.1, 4.9);
    std::vector<Draw> out;
    while (static_cast<int>(out.size()) < count) {
        const Draw d{dj(rng), db(rng)};
        double min_gap = 1e300;
        for (size_t m = 0; m < levels.size(); ++m)
            for (size_t n = m + 1; n < levels.size(); ++n) {
                const double em = levels[m].coeff_j * d.j + levels[m].coeff_b * d.b;
                const double en = levels[n].coeff_j * d.j + levels[n].coeff_b * d.b;
                min_gap = std::min(min_gap, std::abs(em - en));
            }
        if (min_gap > 1e-3) out.push_back(d);
    }
    return out;
}

const std::vector<std::pair<int, int>>& tabulated_pairs() {
    static const std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    return pairs;
}

ValidationGroup check_tables(double tol, unsigned seed) {
    ValidationGroup g;
    g.name = "tables";
    std::mt19937 rng(seed);
    double worst = 0.0;
    for (const auto& [ta, tb] : tabulated_pairs()) {
        const SpinValue sa(ta), sb(tb);
        for (const Draw& d : gapped_draws(sa, sb, 10, rng)) {
            const WorkingMedium medium(sa, sb, d.j);
            const TableValidationReport r = validate_against_table(medium, FieldPoint{d.b}, tol);
            worst = std::max({worst, r.max_eigenvalue_deviation, r.max_subspace_deviation});
        }
    }
    g.max_deviation = worst;
    g.passed = worst < tol;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max deviation %.3e over 6 spin pairs x 10 draws (tol %.1e)", worst, tol);
    g.detail = buf;
    return g;
}

double cycle_value(ClosedFormId id, const CycleResult& r) {
    switch (id) {
        case ClosedFormId::w1_hh: return r.w1;
        case ClosedFormId::qm_xz_hh:
        case ClosedFormId::qm_xy_hh: return r.qm;
        case ClosedFormId::w2_xz_hh: return r.w2;
        case ClosedFormId::qt_xz_hh: return r.qt;
        case ClosedFormId::wt_xz_hh:
        case ClosedFormId::wt_h1:
        case ClosedFormId::wt_11: return r.wt;
        case ClosedFormId::eta_xz_hh:
        case ClosedFormId::eta_xy_hh:
        case ClosedFormId::eta_xx_hh:
        case ClosedFormId::advantage_factor_hh: return r.eta.value();
        default: throw UnknownIdError("closed form has no cycle counterpart");
    }
}

struct FormCase {
    ClosedFormId id;
    int twice_sa, twice_sb;
    char axis_a, axis_b;
};

const std::vector<FormCase>& form_cases() {
    static const std::vector<FormCase> cases = {
        {ClosedFormId::w1_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::qm_xz_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::qm_xy_hh, 1, 1, 'x', 'y'},
        {ClosedFormId::w2_xz_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::qt_xz_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::wt_xz_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::eta_xz_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::eta_xy_hh, 1, 1, 'x', 'y'},
        {ClosedFormId::eta_xx_hh, 1, 1, 'x', 'x'},
        {ClosedFormId::advantage_factor_hh, 1, 1, 'x', 'z'},
        {ClosedFormId::wt_h1, 1, 2, 'x', 'z'},
        {ClosedFormId::wt_11, 2, 2, 'x', 'z'},
    };
    return cases;
}

SideSpec axis_spec(char axis) {
    SideSpec s;
    s.kind = SideSpec::Kind::Axis;
    s.axis = axis;
    return s;
}

/// max relative deviation |closed_form - numerical| / max(1, |closed_form|)
/// over the standard grid; when `advisory_only` is set, checks only the
/// eta_xy form, otherwise every other form.
double closed_form_grid_deviation(bool advisory_only) {
    const std::vector<double> b_pairs[] = {{0.5, 1.0}, {0.5, 4.0}, {1.0, 4.0}, {3.0, 4.0}};
    double worst = 0.0;
    for (const FormCase& fc : form_cases()) {
        const bool is_advisory = (fc.id == ClosedFormId::eta_xy_hh);
        if (is_advisory != advisory_only) continue;
        const SpinValue sa(fc.twice_sa), sb(fc.twice_sb);
        for (double j = 0.0; j <= 1.2 + 1e-9; j += 0.1) {
            for (const auto& bp : b_pairs) {
                const double b1 = bp[0], b2 = bp[1];
                const WorkingMedium medium(sa, sb, j);
                const CyclePoint point{medium, FieldPoint{b1}, FieldPoint{b2}, 1.0,
                                       make_scheme(medium, axis_spec(fc.axis_a), axis_spec(fc.axis_b))};
                const CycleResult r = run_cycle(point);
                const double cf = evaluate(fc.id, j, b1, b2);
                const double dev = std::abs(cf - cycle_value(fc.id, r)) / std::max(1.0, std::abs(cf));
                worst = std::max(worst, dev);
            }
        }
    }
    return worst;
}

ValidationGroup check_closed_forms(double tol) {
    ValidationGroup g;
    g.name = "closed_forms";
    g.max_deviation = closed_form_grid_deviation(false);
    g.passed = g.max_deviation < tol;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max relative deviation %.3e over the J x (B1,B2) grid (tol %.1e)",
                  g.max_deviation, tol);
    g.detail = buf;
    return g;
}

ValidationGroup check_closed_forms_eta_xy(double tol) {
    ValidationGroup g;
    g.name = "closed_forms_eta_xy (advisory)";
    g.advisory = true;
    g.max_deviation = closed_form_grid_deviation(true);
    g.passed = g.max_deviation < tol;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max relative deviation %.3e (tol %.1e); reported only", g.max_deviation, tol);
    g.detail = buf;
    return g;
}

ValidationGroup check_invariants(const std::optional<double>& tol_override, unsigned seed) {
    ValidationGroup g;
    g.name = "invariants";

    // Checks carry their individual default tolerances; the override
    // replaces all of them. Pass/fail tracks the worst deviation/tolerance
    // ratio so unlike checks can share one verdict.
    double worst_ratio = 0.0;
    double worst_dev = 0.0;
    const auto record = [&](double dev, double default_tol) {
        const double tol = tol_override.value_or(default_tol);
        worst_ratio = std::max(worst_ratio, dev / tol);
        worst_dev = std::max(worst_dev, dev);
    };

    // SU(2) algebra and projector structure for 2s = 1..5.
    for (int ts = 1; ts <= 5; ++ts) {
        const SpinValue s(ts);
        const SpinOperators ops = spin_operators(s);
        const cplx i_unit(0.0, 1.0);
        record((ops.sx * ops.sy - ops.sy * ops.sx - i_unit * ops.sz).max_abs(), 1e-12);
        record((ops.sy * ops.sz - ops.sz * ops.sy - i_unit * ops.sx).max_abs(), 1e-12);
        record((ops.sz * ops.sx - ops.sx * ops.sz - i_unit * ops.sy).max_abs(), 1e-12);
        ComplexMatrix casimir = ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz;
        casimir -= s.value() * (s.value() + 1.0) * ComplexMatrix::identity(s.dimension());
        record(casimir.max_abs(), 1e-12);

        const auto projectors = eigenprojectors_of(spin_direction_operator(s, 1.1, 0.6));
        ComplexMatrix sum(s.dimension(), s.dimension());
        for (const auto& p : projectors) {
            sum += p.projector;
            record((p.projector * p.projector - p.projector).max_abs(), 1e-10);
        }
        record((sum - ComplexMatrix::identity(s.dimension())).max_abs(), 1e-10);
    }

    // Cycle invariants: first law, heat signs, transition-matrix structure.
    const std::vector<std::pair<double, double>> fields = {{0.5, 1.0}, {3.0, 4.0}, {4.0, 3.0}};
    const std::vector<std::pair<char, char>> schemes = {{'x', 'z'}, {'x', 'y'}, {'z', 'z'}};
    for (const auto& [ta, tb] : tabulated_pairs()) {
        for (const auto& [axis_a, axis_b] : schemes) {
            for (double j : {0.0, 0.35, 0.8, 1.2}) {
                for (const auto& [b1, b2] : fields) {
                    const WorkingMedium medium(SpinValue(ta), SpinValue(tb), j);
                    const CyclePoint point{medium, FieldPoint{b1}, FieldPoint{b2}, 1.0,
                                           make_scheme(medium, axis_spec(axis_a), axis_spec(axis_b))};
                    const CycleResult r = run_cycle(point);
                    record(std::abs(r.w1 + r.w2 + r.qm + r.qt), 1e-10);
                    record(std::max(0.0, -r.qm), 1e-10);
                    record(std::max(0.0, r.qt), 1e-10);
                    const int n = r.transition.dim;
                    for (int m = 0; m < n; ++m) {
                        double row = 0.0, col = 0.0;
                        for (int k = 0; k < n; ++k) {
                            row += r.transition(m, k);
                            col += r.transition(k, m);
                            record(std::abs(r.transition(m, k) - r.transition(k, m)), 1e-10);
                            record(std::max(0.0, -r.transition(m, k)), 1e-12);
                        }
                        record(std::abs(row - 1.0), 1e-10);
                        record(std::abs(col - 1.0), 1e-10);
                    }
                    const SymmetrizedEnergetics sym = symmetrized_energetics(point);
                    record(std::abs(sym.qm_sym - r.qm), 1e-9);
                    record(std::abs(sym.qt_sym - r.qt), 1e-9);
                    record(std::abs(sym.w_sym + r.wt), 1e-9);
                }
            }
        }
    }

    // Channel/dual trace pairing on a seeded random state and observable.
    {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const int d = 6;
        ComplexMatrix h(d, d), x(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j <= i; ++j) {
                const cplx z(u(rng), i == j ? 0.0 : u(rng));
                h(i, j) = z;
                h(j, i) = std::conj(z);
            }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) x(i, j) = cplx(u(rng), u(rng));
        ComplexMatrix rho = x * x.adjoint();
        rho *= 1.0 / rho.trace().real();
        const WorkingMedium medium(SpinValue(1), SpinValue(2), 0.3);
        const MeasurementScheme scheme = make_scheme(medium, axis_spec('x'), axis_spec('z'));
        record(std::abs(trace_product(apply_nonselective(scheme, rho), h).real() -
                        trace_product(rho, heisenberg_dual(scheme, h)).real()),
               1e-11);
        const ComplexMatrix once = apply_nonselective(scheme, rho);
        record((apply_nonselective(scheme, once) - once).max_abs(), 1e-10);
    }

    // Work-sign threshold for the (1/2, 1) engine; at these fields the
    // dominant-factor threshold matches the true zero to well under 1e-3.
    for (double b1 : {2.0, 3.0}) {
        const double jstar = negative_work_threshold_h1(b1);
        const double lo = evaluate(ClosedFormId::wt_h1, jstar - 1e-3, b1, b1 + 1.0);
        const double hi = evaluate(ClosedFormId::wt_h1, jstar + 1e-3, b1, b1 + 1.0);
        record((lo > 0.0 && hi < 0.0) ? 0.0 : 1.0, 1e-10);
        record(std::max(0.0, -evaluate(ClosedFormId::threshold_h1, jstar - 1e-3, b1, 0.0)), 1e-10);
        record(std::max(0.0, evaluate(ClosedFormId::threshold_h1, jstar + 1e-3, b1, 0.0)), 1e-10);
    }

    g.max_deviation = worst_dev;
    g.passed = worst_ratio < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max deviation %.3e, worst deviation/tolerance ratio %.3e", worst_dev,
                  worst_ratio);
    g.detail = buf;
    return g;
}

}  // namespace

std::vector<ValidationGroup> run_validation(const ValidationOptions& options) {
    const double table_tol = options.tol.value_or(1e-10);
    const double form_tol = options.tol.value_or(1e-9);

    const auto wanted = [&options](const char* name) {
        if (options.groups.empty()) return true;
        for (const std::string& g : options.groups)
            if (std::string(name).rfind(g, 0) == 0) return true;
        return false;
    };

    std::vector<ValidationGroup> groups;
    if (wanted("tables")) groups.push_back(check_tables(table_tol, options.seed));
    if (wanted("closed_forms")) {
        groups.push_back(check_closed_forms(form_tol));
        groups.push_back(check_closed_forms_eta_xy(form_tol));
    }
    if (wanted("invariants")) groups.push_back(check_invariants(options.tol, options.seed));
    return groups;
}

bool all_blocking_passed(const std::vector<ValidationGroup>& groups) {
    for (const ValidationGroup& g : groups)
        if (!g.advisory && !g.passed) return false;
    return true;
}

}  // namespace heatengine
