#include "heatengine/spin.hpp"

#include <cmath>

namespace heatengine {

SpinValue SpinValue::parse(const std::string& tag) {
    const auto slash = tag.find('/');
    try {
        if (slash == std::string::npos) {
            const int whole = std::stoi(tag);
            return SpinValue(2 * whole);
        }
        const int num = std::stoi(tag.substr(0, slash));
        const int den = std::stoi(tag.substr(slash + 1));
        if (den != 2) throw std::invalid_argument("spin denominators other than 2 are not supported");
        return SpinValue(num);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse spin tag '" + tag + "' (expected e.g. 1/2, 1, 3/2)");
    }
}

std::string SpinValue::label() const {
    if (twice_s % 2 == 0) return std::to_string(twice_s / 2);
    return std::to_string(twice_s) + "/2";
}

SpinOperators spin_operators(SpinValue sv) {
    const int d = sv.dimension();
    const double s = sv.value();
    SpinOperators ops{ComplexMatrix(d, d), ComplexMatrix(d, d), ComplexMatrix(d, d)};

    for (int i = 0; i < d; ++i) ops.sz(i, i) = s - i;

    // Basis index i holds m = s - i; raising connects |m> to |m+1>, i.e.
    // row i-1, column i, with amplitude sqrt(s(s+1) - m(m+1)).
    for (int i = 1; i < d; ++i) {
        const double m = s - i;
        const double amp = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
        ops.sx(i - 1, i) += 0.5 * amp;
        ops.sx(i, i - 1) += 0.5 * amp;
        ops.sy(i - 1, i) += cplx(0.0, -0.5) * amp;
        ops.sy(i, i - 1) += cplx(0.0, 0.5) * amp;
    }
    return ops;
}

ComplexMatrix spin_direction_operator(SpinValue s, double theta, double phi) {
    const SpinOperators ops = spin_operators(s);
    ComplexMatrix m = std::sin(theta) * std::cos(phi) * ops.sx;
    m += std::sin(theta) * std::sin(phi) * ops.sy;
    m += std::cos(theta) * ops.sz;
    return m;
}

std::vector<EigenProjector> eigenprojectors_of(const ComplexMatrix& a) {
    constexpr double kGroupTol = 1e-9;
    const SpectralDecomposition sd = hermitian_eigendecompose(a);
    const int n = sd.dimension();
    const ComplexMatrix& v = sd.eigenvectors;

    std::vector<EigenProjector> out;
    int start = 0;
    while (start < n) {
        int stop = start + 1;
        while (stop < n && sd.eigenvalues[static_cast<size_t>(stop)] - sd.eigenvalues[static_cast<size_t>(stop - 1)] < kGroupTol)
            ++stop;
        ComplexMatrix p(n, n);
        double mean = 0.0;
        for (int c = start; c < stop; ++c) {
            mean += sd.eigenvalues[static_cast<size_t>(c)];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p(i, j) += v(i, c) * std::conj(v(j, c));
        }
        out.push_back({mean / (stop - start), std::move(p)});
        start = stop;
    }
    return out;
}

}  // namespace heatengine
