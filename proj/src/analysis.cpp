#include "heatengine/analysis.hpp"

#include <cmath>

namespace heatengine {

namespace {

constexpr double kWorkSignTol = 1e-12;
constexpr double kQmZeroTol = 1e-15;
constexpr double kBracketFloor = 1e-9;
constexpr int kBisectionCap = 200;

double local_zeeman_energy(const ComplexMatrix& rho_reduced, const ComplexMatrix& sz, double b) {
    return 2.0 * b * trace_product(rho_reduced, sz).real();
}

}  // namespace

LocalWorkResult local_works(const CyclePoint& p) {
    const ComplexMatrix h1 = build_hamiltonian(p.medium, p.b1);
    const ComplexMatrix h2 = build_hamiltonian(p.medium, p.b2);
    const ComplexMatrix rho0 = gibbs_state(h1, p.beta).density;
    const ComplexMatrix rho_m = apply_nonselective(p.scheme, rho0);

    const int da = p.medium.spin_a.dimension();
    const int db = p.medium.spin_b.dimension();
    const ComplexMatrix rho0_a = partial_trace(rho0, da, db, Subsystem::A);
    const ComplexMatrix rho0_b = partial_trace(rho0, da, db, Subsystem::B);
    const ComplexMatrix rhom_a = partial_trace(rho_m, da, db, Subsystem::A);
    const ComplexMatrix rhom_b = partial_trace(rho_m, da, db, Subsystem::B);

    LocalWorkResult r;
    r.q_a1 = local_zeeman_energy(rhom_a - rho0_a, p.medium.ops_a.sz, p.b2.b);
    r.q_a2 = local_zeeman_energy(rho0_a - rhom_a, p.medium.ops_a.sz, p.b1.b);
    r.q_b1 = local_zeeman_energy(rhom_b - rho0_b, p.medium.ops_b.sz, p.b2.b);
    r.q_b2 = local_zeeman_energy(rho0_b - rhom_b, p.medium.ops_b.sz, p.b1.b);
    r.w_a = -(r.q_a1 + r.q_a2);
    r.w_b = -(r.q_b1 + r.q_b2);
    r.w_total_local = r.w_a + r.w_b;

    const double w1 = trace_product(rho0, h2 - h1).real();
    const double w2 = trace_product(rho_m, h1 - h2).real();
    r.w_global = -(w1 + w2);
    return r;
}

RefrigeratorResult effective_cold_temperature(const CyclePoint& p) {
    const ComplexMatrix h1 = build_hamiltonian(p.medium, p.b1);
    const ComplexMatrix h2 = build_hamiltonian(p.medium, p.b2);
    const ComplexMatrix rho0 = gibbs_state(h1, p.beta).density;
    const ComplexMatrix rho_m = apply_nonselective(p.scheme, rho0);

    const double qm = trace_product(rho_m - rho0, h2).real();
    const double w1 = trace_product(rho0, h2 - h1).real();
    const double w2 = trace_product(rho_m, h1 - h2).real();
    const double wt = -(w1 + w2);

    RefrigeratorResult r;
    if (wt < -kWorkSignTol) r.cop = qm / (-wt);

    const double temperature = 1.0 / p.beta;
    if (qm <= kQmZeroTol) {
        r.t2 = temperature;
        return r;
    }

    const auto thermal_energy = [&h2](double t) {
        return trace_product(gibbs_state(h2, 1.0 / t).density, h2).real();
    };
    const double target = thermal_energy(temperature) - qm;

    // E(T') grows with T', so bisection applies; no bracket means the
    // deficit exceeds what cooling all the way down could supply.
    double lo = kBracketFloor;
    double hi = temperature;
    if (thermal_energy(lo) - target > 0.0) return r;

    for (int i = 0; i < kBisectionCap; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f = thermal_energy(mid) - target;
        if (std::abs(f) < 1e-12) {
            lo = hi = mid;
            break;
        }
        if (f > 0.0)
            hi = mid;
        else
            lo = mid;
        if (hi - lo < 1e-14 * std::max(1.0, temperature)) break;
    }
    const double t2 = 0.5 * (lo + hi);
    if (std::abs(thermal_energy(t2) - target) < 1e-9) r.t2 = t2;
    return r;
}

std::optional<double> coefficient_of_performance(const CycleResult& r) {
    if (r.wt < -kWorkSignTol) return r.qm / (-r.wt);
    return std::nullopt;
}

}  // namespace heatengine
