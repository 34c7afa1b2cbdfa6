#include "upbtiles/kernels.hpp"

namespace upb::kernels {

namespace {

cplx dotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void matmul_acc_scalar(const cplx* a, const cplx* b, cplx* c,
                       std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) continue;
            const cplx* brow = b + p * m;
            cplx* crow = c + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += aip * brow[j];
        }
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{dotc_scalar, axpy_scalar, matmul_acc_scalar, "scalar"};
    return ops;
}

const Ops& active() {
    static const Ops& ops = avx2_available() ? avx2_ops() : scalar_ops();
    return ops;
}

}  // namespace upb::kernels
