#pragma once

#include <complex>
#include <cstddef>

// Hot complex arithmetic loops. Scalar reference kernels plus an AVX2/FMA
// variant selected once at startup; both are exercised by the equivalence
// tests so either path may serve as the oracle for the other.
namespace upb::kernels {

using cplx = std::complex<double>;

struct Ops {
    // sum_i conj(x[i]) * y[i]
    cplx (*dotc)(const cplx* x, const cplx* y, std::size_t n);
    // y += alpha * x
    void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // c (n x m, row-major) = a (n x k) * b (k x m); c must be zeroed by caller
    void (*matmul_acc)(const cplx* a, const cplx* b, cplx* c,
                       std::size_t n, std::size_t k, std::size_t m);
    const char* name;
};

const Ops& scalar_ops();
bool avx2_available();
const Ops& avx2_ops();  // valid only if avx2_available()

/// Kernel set picked at load time for this CPU.
const Ops& active();

}  // namespace upb::kernels
