#include "rescool/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace rescool::kernels {

namespace {

// Row kernels shared by both variants so the arithmetic order is identical.

inline void matmul_row(const cplx* a, const cplx* b, cplx* out, std::size_t i, std::size_t k,
                       std::size_t m) {
    cplx* row = out + i * m;
    std::fill(row, row + m, cplx{});
    for (std::size_t p = 0; p < k; ++p) {
        const cplx aip = a[i * k + p];
        if (aip == cplx{}) continue;
        const cplx* brow = b + p * m;
        for (std::size_t j = 0; j < m; ++j) {
            row[j] += aip * brow[j];
        }
    }
}

inline void kron_row(const cplx* a, std::size_t ac, const cplx* b, std::size_t br, std::size_t bc,
                     cplx* out, std::size_t r) {
    const std::size_t ia = r / br;
    const std::size_t ib = r % br;
    const std::size_t cols = ac * bc;
    cplx* row = out + r * cols;
    for (std::size_t ja = 0; ja < ac; ++ja) {
        const cplx av = a[ia * ac + ja];
        for (std::size_t jb = 0; jb < bc; ++jb) {
            row[ja * bc + jb] = av * b[ib * bc + jb];
        }
    }
}

inline cplx matvec_row(const cplx* a, const cplx* x, std::size_t i, std::size_t m) {
    cplx acc{};
    const cplx* row = a + i * m;
    for (std::size_t j = 0; j < m; ++j) acc += row[j] * x[j];
    return acc;
}

inline void spectral_row(const cplx* v, const cplx* f, cplx* out, std::size_t i, std::size_t n) {
    cplx* row = out + i * n;
    std::fill(row, row + n, cplx{});
    for (std::size_t p = 0; p < n; ++p) {
        const cplx w = v[i * n + p] * f[p];
        if (w == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] += w * std::conj(v[j * n + p]);
        }
    }
}

using index_t = std::int64_t;

}  // namespace

namespace serial {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n,
            std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) matmul_row(a.data(), b.data(), out.data(), i, k, m);
}

void kron(std::span<const cplx> a, std::size_t ar, std::size_t ac, std::span<const cplx> b,
          std::size_t br, std::size_t bc, std::span<cplx> out) {
    for (std::size_t r = 0; r < ar * br; ++r) kron_row(a.data(), ac, b.data(), br, bc, out.data(), r);
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n,
            std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) out[i] = matvec_row(a.data(), x.data(), i, m);
}

void spectral_assemble(std::span<const cplx> v, std::span<const cplx> f, std::span<cplx> out,
                       std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) spectral_row(v.data(), f.data(), out.data(), i, n);
}

}  // namespace serial

namespace parallel {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n,
            std::size_t k, std::size_t m) {
    const cplx* pa = a.data();
    const cplx* pb = b.data();
    cplx* po = out.data();
    const auto rows = static_cast<index_t>(n);
#pragma omp parallel for schedule(static) if (n * k * m > kParallelThreshold)
    for (index_t i = 0; i < rows; ++i) {
        matmul_row(pa, pb, po, static_cast<std::size_t>(i), k, m);
    }
}

void kron(std::span<const cplx> a, std::size_t ar, std::size_t ac, std::span<const cplx> b,
          std::size_t br, std::size_t bc, std::span<cplx> out) {
    const cplx* pa = a.data();
    const cplx* pb = b.data();
    cplx* po = out.data();
    const auto rows = static_cast<index_t>(ar * br);
#pragma omp parallel for schedule(static) if (out.size() > kParallelThreshold)
    for (index_t r = 0; r < rows; ++r) {
        kron_row(pa, ac, pb, br, bc, po, static_cast<std::size_t>(r));
    }
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out, std::size_t n,
            std::size_t m) {
    const cplx* pa = a.data();
    const cplx* px = x.data();
    cplx* po = out.data();
    const auto rows = static_cast<index_t>(n);
#pragma omp parallel for schedule(static) if (n * m > kParallelThreshold)
    for (index_t i = 0; i < rows; ++i) {
        po[i] = matvec_row(pa, px, static_cast<std::size_t>(i), m);
    }
}

void spectral_assemble(std::span<const cplx> v, std::span<const cplx> f, std::span<cplx> out,
                       std::size_t n) {
    const cplx* pv = v.data();
    const cplx* pf = f.data();
    cplx* po = out.data();
    const auto rows = static_cast<index_t>(n);
#pragma omp parallel for schedule(static) if (n * n * n > kParallelThreshold)
    for (index_t i = 0; i < rows; ++i) {
        spectral_row(pv, pf, po, static_cast<std::size_t>(i), n);
    }
}

}  // namespace parallel

}  // namespace rescool::kernels
