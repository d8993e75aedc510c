#include "heatengine/engine.hpp"

namespace heatengine {

namespace {

constexpr double kEtaDefinedTol = 1e-12;

struct CycleWork {
    ComplexMatrix h1, h2;
    ComplexMatrix rho0, rho_m;
    SpectralDecomposition basis;  // eigenbasis of H(B2)
};

CycleWork prepare(const CyclePoint& p) {
    CycleWork w;
    w.h1 = build_hamiltonian(p.medium, p.b1);
    w.h2 = build_hamiltonian(p.medium, p.b2);
    w.rho0 = gibbs_state(w.h1, p.beta).density;
    w.rho_m = apply_nonselective(p.scheme, w.rho0);
    w.basis = hermitian_eigendecompose(w.h2);
    return w;
}

/// <v_n|a|v_n> for every basis column; real part (a Hermitian).
std::vector<double> basis_diagonal(const ComplexMatrix& a, const SpectralDecomposition& basis) {
    const int n = basis.dimension();
    const ComplexMatrix& v = basis.eigenvectors;
    std::vector<double> d(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < n; ++j) row += a(i, j) * v(j, k);
            acc += std::conj(v(i, k)) * row;
        }
        d[static_cast<size_t>(k)] = acc.real();
    }
    return d;
}

}  // namespace

CycleResult run_cycle(const CyclePoint& p) {
    const CycleWork w = prepare(p);

    CycleResult r;
    r.w1 = trace_product(w.rho0, w.h2 - w.h1).real();
    r.qm = trace_product(w.rho_m - w.rho0, w.h2).real();
    r.w2 = trace_product(w.rho_m, w.h1 - w.h2).real();
    r.qt = trace_product(w.rho0 - w.rho_m, w.h1).real();
    r.wt = -(r.w1 + r.w2);
    if (r.qm > kEtaDefinedTol) r.eta = r.wt / r.qm;
    r.transition = transition_matrix(p.scheme, w.basis);
    r.post_probs = basis_diagonal(w.rho_m, w.basis);
    return r;
}

double WorkDecomposition::total() const {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
}

WorkDecomposition work_decomposition(const CyclePoint& p) {
    const CycleWork w = prepare(p);
    const int n = w.basis.dimension();

    // The eigenvectors of H(B2) also diagonalize H(B1) and rho0 (the two
    // Hamiltonians commute), so initial energies and populations are just
    // basis diagonals.
    const std::vector<double> e_f = w.basis.eigenvalues;
    const std::vector<double> e_i = basis_diagonal(w.h1, w.basis);
    const std::vector<double> probs = basis_diagonal(w.rho0, w.basis);
    const TransitionMatrix t = transition_matrix(p.scheme, w.basis);

    WorkDecomposition d;
    d.dim = n;
    d.terms.assign(static_cast<size_t>(n) * n, 0.0);
    d.delta_i.assign(static_cast<size_t>(n) * n, 0.0);
    d.delta_f.assign(static_cast<size_t>(n) * n, 0.0);
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) {
            const size_t at = static_cast<size_t>(m) * n + k;
            d.delta_i[at] = e_i[static_cast<size_t>(m)] - e_i[static_cast<size_t>(k)];
            d.delta_f[at] = e_f[static_cast<size_t>(m)] - e_f[static_cast<size_t>(k)];
            d.terms[at] = 0.5 * (d.delta_f[at] - d.delta_i[at]) * t(m, k) *
                          (probs[static_cast<size_t>(m)] - probs[static_cast<size_t>(k)]);
        }
    }
    return d;
}

SymmetrizedEnergetics symmetrized_energetics(const CyclePoint& p) {
    const CycleWork w = prepare(p);
    const int n = w.basis.dimension();

    const std::vector<double> e_f = w.basis.eigenvalues;
    const std::vector<double> e_i = basis_diagonal(w.h1, w.basis);
    const std::vector<double> probs = basis_diagonal(w.rho0, w.basis);
    const TransitionMatrix t = transition_matrix(p.scheme, w.basis);

    SymmetrizedEnergetics s;
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k < n; ++k) {
            const double pd = probs[static_cast<size_t>(m)] - probs[static_cast<size_t>(k)];
            s.qm_sym += 0.5 * (e_f[static_cast<size_t>(k)] - e_f[static_cast<size_t>(m)]) * t(m, k) * pd;
            s.qt_sym += 0.5 * (e_i[static_cast<size_t>(k)] - e_i[static_cast<size_t>(m)]) * t(m, k) * (-pd);
            s.w_sym += 0.5 * ((e_f[static_cast<size_t>(m)] - e_f[static_cast<size_t>(k)]) -
                              (e_i[static_cast<size_t>(m)] - e_i[static_cast<size_t>(k)])) *
                       t(m, k) * pd;
        }
    }
    return s;
}

}  // namespace heatengine
