#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rescool {

using cplx = std::complex<double>;

class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : amps_(dim) {}
    explicit ComplexVector(std::vector<cplx> amps) : amps_(std::move(amps)) {}
    ComplexVector(std::initializer_list<cplx> amps) : amps_(amps) {}

    static ComplexVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amps_.size(); }
    bool empty() const noexcept { return amps_.empty(); }

    cplx& operator[](std::size_t i) { return amps_[i]; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

    std::span<cplx> span() noexcept { return amps_; }
    std::span<const cplx> span() const noexcept { return amps_; }
    const std::vector<cplx>& values() const noexcept { return amps_; }

    double norm() const;
    double norm_squared() const;
    bool is_normalized() const;  // |norm - 1| <= 1e-10 (scaled)

    /// Throws InvalidArgument on a zero vector.
    ComplexVector normalized() const;

    ComplexVector& operator+=(const ComplexVector& other);
    ComplexVector& operator-=(const ComplexVector& other);
    ComplexVector& operator*=(cplx s);

    friend ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
    friend ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
    friend ComplexVector operator*(cplx s, ComplexVector v) { return v *= s; }

private:
    std::vector<cplx> amps_;
};

/// <a|b>, conjugate-linear in the first argument.
cplx inner(const ComplexVector& a, const ComplexVector& b);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
    /// Row-list literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const cplx> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<cplx> span() noexcept { return data_; }
    std::span<const cplx> span() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexVector column(std::size_t j) const;
    double max_abs() const;

    /// max |A - A^dagger| entrywise; infinity for non-square matrices.
    double hermiticity_error() const;
    bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a^p by repeated squaring; p = 0 gives the identity.
ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t p);

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    ComplexVector vector(std::size_t j) const { return eigenvectors.column(j); }
};

/// Throws NotHermitian if max|H - H^dagger| > 1e-10.
EigenSystem hermitian_eig(const ComplexMatrix& h);

/// exp(-i h t) through the eigendecomposition of h.
ComplexMatrix propagator(const ComplexMatrix& h, double t);
ComplexMatrix propagator(const EigenSystem& spectrum, double t);

/// exp(-i h t) v without forming the propagator.
ComplexVector propagate(const EigenSystem& spectrum, double t, const ComplexVector& v);

}  // namespace rescool
