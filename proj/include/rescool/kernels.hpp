#pragma once

// Dense complex kernels on row-major buffers.
//
// Each kernel exists twice: `parallel` (OpenMP over output rows) is what the
// library calls; `serial` is the plain reference used by tests and benchmarks.
// Both produce bitwise identical results since every output element is
// accumulated in the same order.

#include <complex>
#include <cstddef>
#include <span>

namespace rescool::kernels {

using cplx = std::complex<double>;

namespace serial {

// out[n x m] = a[n x k] * b[k x m]
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n,
            std::size_t k, std::size_t m);

// out[(ar*br) x (ac*bc)] = a (x) b
void kron(std::span<const cplx> a, std::size_t ar, std::size_t ac, std::span<const cplx> b,
          std::size_t br, std::size_t bc, std::span<cplx> out);

// out[n] = a[n x m] * x[m]
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n,
            std::size_t m);

// out[n x n] = v * diag(f) * v^dagger, v is n x n
void spectral_assemble(std::span<const cplx> v, std::span<const cplx> f, std::span<cplx> out,
                       std::size_t n);

}  // namespace serial

namespace parallel {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n,
            std::size_t k, std::size_t m);
void kron(std::span<const cplx> a, std::size_t ar, std::size_t ac, std::span<const cplx> b,
          std::size_t br, std::size_t bc, std::span<cplx> out);
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n,
            std::size_t m);
void spectral_assemble(std::span<const cplx> v, std::span<const cplx> f, std::span<cplx> out,
                       std::size_t n);

}  // namespace parallel

/// Work size (multiply-adds) below which the parallel kernels stay single-threaded.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace rescool::kernels
