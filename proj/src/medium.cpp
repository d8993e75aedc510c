#include "heatengine/medium.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace heatengine {

ComplexMatrix build_hamiltonian(const WorkingMedium& m, FieldPoint b) {
    if (!std::isfinite(b.b)) throw std::invalid_argument("build_hamiltonian: field must be finite");
    const int da = m.spin_a.dimension();
    const int db = m.spin_b.dimension();
    const ComplexMatrix ia = ComplexMatrix::identity(da);
    const ComplexMatrix ib = ComplexMatrix::identity(db);

    ComplexMatrix h = kron(m.ops_a.sx, m.ops_b.sx);
    h += kron(m.ops_a.sy, m.ops_b.sy);
    h += kron(m.ops_a.sz, m.ops_b.sz);
    h *= 8.0 * m.coupling_j;
    ComplexMatrix zeeman = kron(m.ops_a.sz, ib);
    zeeman += kron(ia, m.ops_b.sz);
    zeeman *= 2.0 * b.b;
    h += zeeman;
    return h;
}

SpectralDecomposition spectrum(const WorkingMedium& m, FieldPoint b) {
    return hermitian_eigendecompose(build_hamiltonian(m, b));
}

namespace {

using Amp = TabulatedLevel::Amplitude;

TabulatedLevel level(double cj, double cb, std::vector<Amp> amps) {
    TabulatedLevel l;
    l.coeff_j = cj;
    l.coeff_b = cb;
    l.state = std::move(amps);
    return l;
}

const double R12 = std::sqrt(1.0 / 2.0);
const double R13 = std::sqrt(1.0 / 3.0);
const double R23 = std::sqrt(2.0 / 3.0);
const double R16 = std::sqrt(1.0 / 6.0);
const double R25 = std::sqrt(2.0 / 5.0);
const double R35 = std::sqrt(3.0 / 5.0);
const double R115 = std::sqrt(1.0 / 15.0);
const double R815 = std::sqrt(8.0 / 15.0);
const double R110 = std::sqrt(1.0 / 10.0);
const double R310 = std::sqrt(3.0 / 10.0);
const double R120 = std::sqrt(1.0 / 20.0);

// Levels are entered exactly as published, including the handful of
// misprinted amplitudes; the usability screen below decides which states
// participate in projector comparisons.
std::vector<TabulatedLevel> levels_half_half() {
    return {
        level(-6, 0, {{R12, 1, 0}, {-R12, 0, 1}}),
        level(2, -2, {{1.0, 1, 1}}),
        level(2, 0, {{R12, 1, 0}, {R12, 0, 1}}),
        level(2, 2, {{1.0, 0, 0}}),
    };
}

std::vector<TabulatedLevel> levels_half_one() {
    return {
        level(-8, -1, {{-R23, 0, 2}, {R13, 1, 1}}),
        level(-8, 1, {{-R13, 0, 1}, {R23, 1, 0}}),
        level(4, -3, {{1.0, 1, 2}}),
        level(4, -1, {{R13, 0, 2}, {R23, 1, 1}}),
        level(4, 1, {{R23, 0, 1}, {R13, 1, 0}}),
        level(4, 3, {{1.0, 0, 0}}),
    };
}

std::vector<TabulatedLevel> levels_half_threehalf() {
    const double r32 = std::sqrt(3.0 / 2.0);  // as published; not a valid amplitude
    return {
        level(-10, -2, {{-r32, 0, 3}, {0.5, 1, 2}}),
        level(-10, 2, {{-0.5, 0, 1}, {r32, 1, 0}}),
        level(-10, 0, {{-R12, 0, 2}, {R12, 1, 1}}),
        level(6, 0, {{R12, 0, 2}, {R12, 1, 1}}),
        level(6, -4, {{1.0, 1, 3}}),
        level(6, -2, {{0.5, 0, 3}, {r32, 1, 2}}),
        level(6, 2, {{r32, 0, 1}, {0.5, 1, 0}}),
        level(6, 4, {{1.0, 0, 0}}),
    };
}

std::vector<TabulatedLevel> levels_one_one() {
    return {
        level(-8, -2, {{-R12, 1, 2}, {0.5, 2, 1}}),  // as published; not unit norm
        level(-8, 2, {{-R12, 0, 1}, {R12, 1, 0}}),
        level(8, -4, {{1.0, 2, 2}}),
        level(-16, 0, {{R13, 0, 2}, {-R13, 1, 1}, {R13, 2, 0}}),
        level(-8, 0, {{-R12, 0, 2}, {R12, 2, 0}}),
        level(8, 0, {{R16, 0, 2}, {R23, 1, 1}, {R16, 2, 0}}),
        level(8, 4, {{1.0, 0, 0}}),
        level(8, -2, {{R12, 1, 2}, {R12, 2, 1}}),
        level(8, 2, {{R12, 0, 1}, {R12, 1, 0}}),
    };
}

std::vector<TabulatedLevel> levels_one_threehalf() {
    return {
        level(-20, -1, {{R12, 0, 3}, {-R13, 1, 2}, {R16, 2, 1}}),
        level(-20, 1, {{R16, 0, 2}, {-R13, 1, 1}, {R12, 2, 0}}),
        level(-8, -3, {{-R35, 1, 3}, {R25, 2, 2}}),
        level(-8, -1, {{-R25, 0, 3}, {-R115, 1, 2}, {R815, 2, 1}}),
        level(-8, 1, {{-R815, 0, 2}, {R115, 1, 1}, {R25, 2, 0}}),
        level(-8, 3, {{-0.4, 0, 1}, {R35, 1, 0}}),        // as published; not unit norm
        level(12, -3, {{R25, 1, 3}, {0.6, 2, 2}}),        // as published; not unit norm
        level(12, 3, {{R35, 0, 1}, {R25, 1, 0}}),
        level(12, -5, {{1.0, 2, 3}}),
        level(12, -1, {{R110, 0, 3}, {R35, 1, 2}, {R310, 2, 1}}),
        level(12, 1, {{R310, 0, 2}, {R35, 1, 1}, {R110, 2, 1}}),  // as published; mixed kets
        level(12, 5, {{1.0, 0, 0}}),
    };
}

std::vector<TabulatedLevel> levels_threehalf_threehalf() {
    return {
        level(-22, -2, {{R310, 1, 3}, {-R25, 2, 2}, {R310, 3, 1}}),
        level(-22, 2, {{R310, 0, 2}, {-R25, 1, 1}, {R310, 2, 0}}),
        level(-6, -4, {{-R12, 2, 3}, {R12, 3, 2}}),
        level(-6, -2, {{-R12, 1, 3}, {R12, 3, 1}}),
        level(18, -6, {{1.0, 3, 3}}),
        level(-6, 2, {{-R12, 0, 2}, {R12, 2, 0}}),
        level(-6, 4, {{-R12, 0, 1}, {R12, 1, 0}}),
        level(-30, 0, {{-0.5, 0, 3}, {0.5, 1, 2}, {-0.5, 2, 1}, {0.5, 3, 0}}),
        level(-22, 0, {{3 * R120, 0, 3}, {-R120, 1, 2}, {-R120, 2, 1}, {3 * R120, 3, 0}}),
        level(-6, 0, {{-0.5, 0, 3}, {-0.5, 1, 2}, {0.5, 2, 1}, {0.5, 3, 0}}),
        level(18, 0, {{3 * R120, 0, 3}, {R120, 1, 2}, {R120, 2, 1}, {3 * R120, 3, 0}}),  // as published
        level(18, 6, {{1.0, 0, 0}}),
        level(18, -4, {{R12, 2, 3}, {R12, 3, 2}}),
        level(18, -2, {{std::sqrt(1.0 / 5.0), 1, 3}, {R35, 2, 2}, {std::sqrt(1.0 / 5.0), 3, 1}}),
        level(18, 2, {{std::sqrt(1.0 / 5.0), 0, 2}, {R35, 1, 1}, {std::sqrt(1.0 / 5.0), 2, 0}}),
        level(18, 4, {{R12, 0, 1}, {R12, 1, 0}}),
    };
}

std::vector<cplx> state_vector(const TabulatedLevel& l, int da, int db, bool normalize) {
    std::vector<cplx> v(static_cast<size_t>(da) * db, 0.0);
    double n2 = 0.0;
    for (const Amp& a : l.state) {
        v[static_cast<size_t>(a.idx_a) * db + a.idx_b] = a.value;
        n2 += a.value * a.value;
    }
    if (normalize && n2 > 0.0) {
        const double inv = 1.0 / std::sqrt(n2);
        for (cplx& z : v) z *= inv;
    }
    return v;
}

/// A published state is trusted only if, after normalization, it is an
/// actual eigenvector of H at a generic probe point. This catches every
/// misprint class at once: wrong normalization, wrong ket, and states
/// accidentally swapped between levels.
void screen_states(std::vector<TabulatedLevel>& levels, SpinValue a, SpinValue b) {
    const double probe_j = 0.37, probe_b = 0.533;
    const WorkingMedium medium(a, b, probe_j);
    const ComplexMatrix h = build_hamiltonian(medium, FieldPoint{probe_b});
    const int d = medium.dimension();
    const int db = b.dimension();
    const double tol = 1e-8 * std::max(1.0, h.frobenius_norm());

    for (TabulatedLevel& l : levels) {
        const double energy = l.coeff_j * probe_j + l.coeff_b * probe_b;
        const std::vector<cplx> v = state_vector(l, a.dimension(), db, true);
        double r2 = 0.0;
        for (int i = 0; i < d; ++i) {
            cplx hv = 0.0;
            for (int j = 0; j < d; ++j) hv += h(i, j) * v[static_cast<size_t>(j)];
            r2 += std::norm(hv - energy * v[static_cast<size_t>(i)]);
        }
        l.state_usable = (std::sqrt(r2) <= tol);
    }
}

}  // namespace

const std::vector<TabulatedLevel>& tabulated_levels(SpinValue a, SpinValue b) {
    static const std::map<std::pair<int, int>, std::vector<TabulatedLevel>> registry = [] {
        std::map<std::pair<int, int>, std::vector<TabulatedLevel>> r;
        const auto add = [&r](int ta, int tb, std::vector<TabulatedLevel> levels) {
            screen_states(levels, SpinValue(ta), SpinValue(tb));
            r.emplace(std::make_pair(ta, tb), std::move(levels));
        };
        add(1, 1, levels_half_half());
        add(1, 2, levels_half_one());
        add(1, 3, levels_half_threehalf());
        add(2, 2, levels_one_one());
        add(2, 3, levels_one_threehalf());
        add(3, 3, levels_threehalf_threehalf());
        return r;
    }();
    const auto it = registry.find({a.twice_s, b.twice_s});
    if (it == registry.end())
        throw UnsupportedPairError("no reference table for spin pair (" + a.label() + ", " + b.label() + ")");
    return it->second;
}

TableValidationReport validate_against_table(const WorkingMedium& m, FieldPoint b, double tol) {
    const std::vector<TabulatedLevel>& levels = tabulated_levels(m.spin_a, m.spin_b);
    const int d = m.dimension();
    const int db = m.spin_b.dimension();

    std::vector<int> order(levels.size());
    for (size_t i = 0; i < levels.size(); ++i) order[i] = static_cast<int>(i);
    const auto energy_of = [&](int i) {
        return levels[static_cast<size_t>(i)].coeff_j * m.coupling_j + levels[static_cast<size_t>(i)].coeff_b * b.b;
    };
    std::sort(order.begin(), order.end(), [&](int i, int j) { return energy_of(i) < energy_of(j); });

    const SpectralDecomposition sd = spectrum(m, b);
    TableValidationReport report;
    for (int n = 0; n < d; ++n)
        report.max_eigenvalue_deviation = std::max(
            report.max_eigenvalue_deviation,
            std::abs(energy_of(order[static_cast<size_t>(n)]) - sd.eigenvalues[static_cast<size_t>(n)]));

    // Cluster levels that are degenerate at this parameter point; the
    // same sorted positions index the numerical eigenvectors.
    const ComplexMatrix h = build_hamiltonian(m, b);
    const double cluster_tol = 1e-8 * std::max(1.0, h.frobenius_norm());
    int start = 0;
    while (start < d) {
        int stop = start + 1;
        while (stop < d && energy_of(order[static_cast<size_t>(stop)]) - energy_of(order[static_cast<size_t>(stop - 1)]) < cluster_tol)
            ++stop;

        bool all_usable = true;
        for (int k = start; k < stop; ++k)
            all_usable = all_usable && levels[static_cast<size_t>(order[static_cast<size_t>(k)])].state_usable;

        if (!all_usable) {
            ++report.clusters_skipped;
            start = stop;
            continue;
        }

        // Gram-Schmidt over the published states; degenerate clusters can
        // only be compared as whole subspaces.
        std::vector<std::vector<cplx>> basis;
        bool rank_ok = true;
        for (int k = start; k < stop; ++k) {
            std::vector<cplx> v = state_vector(levels[static_cast<size_t>(order[static_cast<size_t>(k)])], m.spin_a.dimension(), db, true);
            for (const auto& u : basis) {
                cplx overlap = 0.0;
                for (int i = 0; i < d; ++i) overlap += std::conj(u[static_cast<size_t>(i)]) * v[static_cast<size_t>(i)];
                for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] -= overlap * u[static_cast<size_t>(i)];
            }
            double n2 = 0.0;
            for (const cplx& z : v) n2 += std::norm(z);
            if (n2 < 1e-12) {
                rank_ok = false;
                break;
            }
            const double inv = 1.0 / std::sqrt(n2);
            for (cplx& z : v) z *= inv;
            basis.push_back(std::move(v));
        }
        if (!rank_ok) {
            ++report.clusters_skipped;
            start = stop;
            continue;
        }

        double dev2 = 0.0;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                cplx p_table = 0.0;
                for (const auto& u : basis) p_table += u[static_cast<size_t>(i)] * std::conj(u[static_cast<size_t>(j)]);
                cplx p_num = 0.0;
                for (int k = start; k < stop; ++k)
                    p_num += sd.eigenvectors(i, k) * std::conj(sd.eigenvectors(j, k));
                dev2 += std::norm(p_num - p_table);
            }
        }
        report.max_subspace_deviation = std::max(report.max_subspace_deviation, std::sqrt(dev2));
        ++report.clusters_checked;
        start = stop;
    }

    report.passed = report.max_eigenvalue_deviation < tol && report.max_subspace_deviation < tol;
    return report;
}

}  // namespace heatengine
