#include "rescool/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rescool/errors.hpp"
#include "rescool/kernels.hpp"
#include "rescool/tolerance.hpp"

namespace rescool {

// ---------------------------------------------------------------- vector

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range for dimension " +
                              std::to_string(dim));
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return v;
}

double ComplexVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

bool ComplexVector::is_normalized() const {
    return std::abs(norm() - 1.0) <= scaled(tolerance::normalized);
}

ComplexVector ComplexVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InvalidArgument("cannot normalize a zero vector");
    ComplexVector out(*this);
    out *= 1.0 / n;
    return out;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
    if (other.dim() != dim()) throw DimensionMismatch("vector addition: dimension mismatch");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
    return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
    if (other.dim() != dim()) throw DimensionMismatch("vector subtraction: dimension mismatch");
    for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
    return *this;
}

ComplexVector& ComplexVector::operator*=(cplx s) {
    for (auto& a : amps_) a *= s;
    return *this;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("inner product: dimension mismatch");
    cplx acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// ---------------------------------------------------------------- matrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                std::to_string(rows_ * cols_));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
    ComplexVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& a : data_) m = std::max(m, std::abs(a));
    return m;
}

double ComplexMatrix::hermiticity_error() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionMismatch("matrix addition: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionMismatch("matrix subtraction: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& a : data_) a *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    kernels::parallel::matmul(a.span(), b.span(), out.span(), a.rows(), a.cols(), b.cols());
    return out;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.dim()) throw DimensionMismatch("matrix-vector product: dimension mismatch");
    ComplexVector out(a.rows());
    kernels::parallel::matvec(a.span(), x.span(), out.span(), a.rows(), a.cols());
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.span().size(); ++i) m = std::max(m, std::abs(a.span()[i] - b.span()[i]));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.empty() || b.empty()) throw InvalidArgument("kron: empty operand");
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    kernels::parallel::kron(a.span(), a.rows(), a.cols(), b.span(), b.rows(), b.cols(), out.span());
    return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t p) {
    if (!a.is_square()) throw DimensionMismatch("matrix_power: matrix must be square");
    ComplexMatrix result = ComplexMatrix::identity(a.rows());
    ComplexMatrix base = a;
    bool first = true;
    while (p > 0) {
        if (p & 1u) {
            result = first ? base : result * base;
            first = false;
        }
        p >>= 1u;
        if (p > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------- spectra

namespace {

void require_hermitian(const ComplexMatrix& h, const char* what) {
    if (!h.is_square()) throw NotHermitian(std::string(what) + ": matrix is not square");
    const double err = h.hermiticity_error();
    if (err > scaled(tolerance::hermitian_input)) {
        throw NotHermitian(std::string(what) + ": max|H - H^dagger| = " + std::to_string(err));
    }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& h) {
    require_hermitian(h, "hermitian_eig");
    const auto n = static_cast<Eigen::Index>(h.rows());
    Eigen::MatrixXcd m(n, n);
    // Symmetrize so the solver sees an exactly Hermitian input.
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = 0.5 * (h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +
                             std::conj(h(static_cast<std::size_t>(j), static_cast<std::size_t>(i))));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw Error("hermitian_eig: eigensolver did not converge");

    EigenSystem es;
    es.eigenvalues.resize(static_cast<std::size_t>(n));
    es.eigenvectors = ComplexMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        es.eigenvalues[static_cast<std::size_t>(j)] = solver.eigenvalues()(j);
        for (Eigen::Index i = 0; i < n; ++i)
            es.eigenvectors(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = solver.eigenvectors()(i, j);
    }
    return es;
}

ComplexMatrix propagator(const EigenSystem& spectrum, double t) {
    const std::size_t n = spectrum.size();
    std::vector<cplx> phases(n);
    for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -spectrum.eigenvalues[k] * t);
    ComplexMatrix u(n, n);
    kernels::parallel::spectral_assemble(spectrum.eigenvectors.span(), phases, u.span(), n);
    return u;
}

ComplexVector propagate(const EigenSystem& spectrum, double t, const ComplexVector& v) {
    const std::size_t n = spectrum.size();
    if (v.dim() != n) throw DimensionMismatch("propagate: dimension mismatch");
    const ComplexMatrix& w = spectrum.eigenvectors;
    ComplexVector coeffs(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t i = 0; i < n; ++i) acc += std::conj(w(i, k)) * v[i];
        coeffs[k] = acc * std::polar(1.0, -spectrum.eigenvalues[k] * t);
    }
    return w * coeffs;
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
    require_hermitian(h, "propagator");
    if (t == 0.0) return ComplexMatrix::identity(h.rows());
    return propagator(hermitian_eig(h), t);
}

}  // namespace rescool
