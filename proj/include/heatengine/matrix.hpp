#pragma once

#include <complex>
#include <vector>

#include "heatengine/errors.hpp"

namespace heatengine {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. Sized for the small operator
/// algebra of coupled spin pairs (dimension 4..16), not for large problems.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// max_{ij} |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

/// Eigensystem of a Hermitian matrix: eigenvalues ascending, unit-norm
/// eigenvectors in the matching columns of `eigenvectors`. Output is
/// deterministic: each eigenvector's first component of magnitude above
/// 1e-8 is made real positive, and exactly degenerate eigenvalues are
/// ordered by lexicographic comparison of the phase-fixed vectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

/// Cyclic Jacobi diagonalization with complex rotations. Requires
/// hermiticity defect below 1e-12; iterates until the off-diagonal
/// Frobenius norm falls under 1e-13 * ||a||, capped at 100 sweeps.
SpectralDecomposition hermitian_eigendecompose(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr[a*b] as the double sum over a_ij * b_ji; the product is never formed.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { A, B };

/// Reduce a (dim_a*dim_b)-dimensional operator to the kept factor.
ComplexMatrix partial_trace(const ComplexMatrix& a, int dim_a, int dim_b, Subsystem keep);

}  // namespace heatengine
