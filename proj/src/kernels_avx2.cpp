#include "upbtiles/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace upb::kernels {

namespace {

// Two interleaved complex doubles per __m256d: [re0, im0, re1, im1].

cplx dotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        // re: xr*yr + xi*yi  -> element-wise product summed within pairs
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        // im: xr*yi - xi*yr  -> x * swapped(y), with alternating signs
        __m256d ysw = _mm256_permute_pd(yv, 0x5);
        acc_im = _mm256_fmadd_pd(xv, ysw, acc_im);
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    // even slots hold xr*yi, odd slots xi*yr
    double im = (im4[0] - im4[1]) + (im4[2] - im4[3]);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
    // acc += (ar + i*ai) * b for two packed complexes
    __m256d bsw = _mm256_permute_pd(b, 0x5);       // [im, re, im, re]
    __m256d t = _mm256_mul_pd(ai, bsw);            // [ai*bi, ai*br, ...]
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, cmul_acc(yv, ar, ai, xv));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void matmul_acc_avx2(const cplx* a, const cplx* b, cplx* c,
                     std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{}) continue;
            axpy_avx2(aip, b + p * m, c + i * m, m);
        }
    }
}

}  // namespace

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& avx2_ops() {
    static const Ops ops{dotc_avx2, axpy_avx2, matmul_acc_avx2, "avx2"};
    return ops;
}

}  // namespace upb::kernels

#else  // non-x86 fallback

namespace upb::kernels {
bool avx2_available() { return false; }
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace upb::kernels

#endif
