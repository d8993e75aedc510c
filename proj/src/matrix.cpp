#include "heatengine/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace heatengine {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kOffDiagonalFactor = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kPhasePivotTol = 1e-8;

double off_diagonal_norm(const ComplexMatrix& a) {
    const int n = a.rows();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatchError("matrix addition: shapes differ");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatchError("matrix subtraction: shapes differ");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() == 0 || b.rows() == 0) throw DimensionMismatchError("kron: empty factor");
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionMismatchError("trace_product: need square matrices of equal dimension");
    cplx t = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

ComplexMatrix partial_trace(const ComplexMatrix& a, int dim_a, int dim_b, Subsystem keep) {
    if (!a.square() || a.rows() != dim_a * dim_b)
        throw DimensionMismatchError("partial_trace: matrix dimension is not dim_a*dim_b");
    if (keep == Subsystem::A) {
        ComplexMatrix r(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                for (int k = 0; k < dim_b; ++k) r(i, j) += a(i * dim_b + k, j * dim_b + k);
        return r;
    }
    ComplexMatrix r(dim_b, dim_b);
    for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
            for (int i = 0; i < dim_a; ++i) r(k, l) += a(i * dim_b + k, i * dim_b + l);
    return r;
}

namespace {

void fix_phase(ComplexMatrix& v, int col) {
    const int n = v.rows();
    for (int i = 0; i < n; ++i) {
        const double m = std::abs(v(i, col));
        if (m > kPhasePivotTol) {
            const cplx u = std::conj(v(i, col)) / m;
            for (int k = 0; k < n; ++k) v(k, col) *= u;
            v(i, col) = cplx(m, 0.0);
            return;
        }
    }
}

bool column_lex_less(const ComplexMatrix& v, int c1, int c2) {
    for (int i = 0; i < v.rows(); ++i) {
        const cplx a = v(i, c1), b = v(i, c2);
        if (a.real() != b.real()) return a.real() < b.real();
        if (a.imag() != b.imag()) return a.imag() < b.imag();
    }
    return false;
}

}  // namespace

SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& input) {
    if (!input.square()) throw NonHermitianError("eigendecompose: matrix is not square");
    if (input.hermiticity_defect() > kHermitianTol)
        throw NonHermitianError("eigendecompose: hermiticity defect exceeds 1e-12");

    const int n = input.rows();
    // Symmetrize so the working copy is Hermitian to the bit and the
    // diagonal is exactly real.
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
        a(i, i) = cplx(a(i, i).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = a.frobenius_norm();
    const double tol = kOffDiagonalFactor * scale;

    bool converged = (off_diagonal_norm(a) <= tol);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double m = std::abs(apq);
                if (m == 0.0) continue;
                const cplx phase = apq / m;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx spq = s * phase;          // J(p,q)
                const cplx sqp = -s * std::conj(phase);  // J(q,p)

                // a <- a * J
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + sqp * akq;
                    a(k, q) = spq * akp + c * akq;
                }
                // a <- J^dagger * a
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(sqp) * aqk;
                    a(q, k) = std::conj(spq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);

                // v <- v * J
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + sqp * vkq;
                    v(k, q) = spq * vkp + c * vkq;
                }
            }
        }
        converged = (off_diagonal_norm(a) <= tol);
    }
    if (!converged)
        throw NoConvergenceError("eigendecompose: Jacobi sweeps exhausted before convergence");

    for (int j = 0; j < n; ++j) fix_phase(v, j);

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const double li = a(i, i).real(), lj = a(j, j).real();
        if (li != lj) return li < lj;
        return column_lex_less(v, i, j);
    });

    SpectralDecomposition sd;
    sd.eigenvalues.resize(static_cast<size_t>(n));
    sd.eigenvectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        sd.eigenvalues[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]).real();
        for (int i = 0; i < n; ++i) sd.eigenvectors(i, j) = v(i, order[static_cast<size_t>(j)]);
    }
    return sd;
}

}  // namespace heatengine
