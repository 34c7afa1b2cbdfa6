#include "upbtiles/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "upbtiles/kernels.hpp"

namespace upb {

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

}  // namespace upb

namespace upb::linalg {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in multiply");
    ComplexMatrix c(a.rows(), b.cols());
    kernels::active().matmul_acc(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
    return r;
}

ComplexMatrix outer(const Ket& u, const Ket& v) {
    ComplexMatrix r(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) r(i, j) = u[i] * std::conj(v[j]);
    return r;
}

Ket apply(const ComplexMatrix& m, const Ket& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("shape mismatch in apply");
    Ket r(m.rows());
    kernels::active().matmul_acc(m.data(), v.amp.data(), r.amp.data(), m.rows(), m.cols(), 1);
    return r;
}

cplx inner(const Ket& u, const Ket& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("dimension mismatch in inner");
    return kernels::active().dotc(u.amp.data(), v.amp.data(), u.dim());
}

double norm(const Ket& v) { return std::sqrt(std::real(inner(v, v))); }

Ket normalized(const Ket& v) {
    const double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize null vector");
    Ket r = v;
    for (auto& a : r.amp) a /= n;
    return r;
}

Ket& scale(Ket& v, cplx s) {
    for (auto& a : v.amp) a *= s;
    return v;
}

cplx trace(const ComplexMatrix& m) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    const cplx* d = m.data();
    for (std::size_t i = 0; i < m.rows() * m.cols(); ++i) s += std::norm(d[i]);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    const cplx* d = m.data();
    for (std::size_t i = 0; i < m.rows() * m.cols(); ++i) s = std::max(s, std::abs(d[i]));
    return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, max_abs(m));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol * scale) return false;
    return true;
}

Ket fix_phase(const Ket& v) {
    Ket r = v;
    for (const auto& a : r.amp) {
        const double m = std::abs(a);
        if (m > 1e-12) {
            const cplx ph = std::conj(a) / m;
            for (auto& x : r.amp) x *= ph;
            break;
        }
    }
    return r;
}

Ket tensor(const Ket& a, const Ket& b) {
    Ket r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] == cplx{}) continue;
        kernels::active().axpy(a[i], b.amp.data(), r.amp.data() + i * b.dim(), b.dim());
    }
    return r;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                                Side side) {
    const std::size_t n = dA * dB;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("partial_transpose: matrix is not dA*dB square");
    ComplexMatrix r(n, n);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j)
            for (std::size_t k = 0; k < dA; ++k)
                for (std::size_t l = 0; l < dB; ++l) {
                    if (side == Side::B)
                        r(i * dB + j, k * dB + l) = m(i * dB + l, k * dB + j);
                    else
                        r(i * dB + j, k * dB + l) = m(k * dB + j, i * dB + l);
                }
    return r;
}

namespace {

double off_diag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& m) {
    if (!is_hermitian(m)) throw std::invalid_argument("hermitian_eig: input is not Hermitian");
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double fnorm = std::max(frobenius_norm(a), 1e-300);
    const double thresh = 1e-13 * fnorm;

    for (int sweep = 0; sweep < 100 && off_diag_norm(a) > thresh; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double absq = std::abs(apq);
                if (absq <= 1e-300) continue;
                const cplx u = apq / absq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * absq);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // a <- J^dagger a
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx ap = a(p, j), aq = a(q, j);
                    a(p, j) = c * ap - s * u * aq;
                    a(q, j) = s * std::conj(u) * ap + c * aq;
                }
                // a <- a J
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * std::conj(u) * aq;
                    a(i, q) = s * u * ap + c * aq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // v <- v J
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * std::conj(u) * vq;
                    v(i, q) = s * u * vp + c * vq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigResult r;
    r.eigenvalues.reserve(n);
    r.eigenvectors.reserve(n);
    for (std::size_t idx : order) {
        r.eigenvalues.push_back(a(idx, idx).real());
        Ket col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v(i, idx);
        r.eigenvectors.push_back(fix_phase(col));
    }
    return r;
}

std::size_t numeric_rank(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("numeric_rank: tol must be positive");
    std::vector<double> sv;
    if (m.rows() == m.cols() && is_hermitian(m)) {
        for (double ev : hermitian_eig(m).eigenvalues) sv.push_back(std::abs(ev));
    } else {
        const ComplexMatrix g = multiply(adjoint(m), m);
        for (double ev : hermitian_eig(g).eigenvalues) sv.push_back(std::sqrt(std::max(ev, 0.0)));
    }
    const double smax = *std::max_element(sv.begin(), sv.end());
    if (smax == 0.0) return 0;
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [&](double s) { return s > tol * smax; }));
}

std::vector<Ket> gram_schmidt(const std::vector<Ket>& vectors, double drop_tol) {
    std::vector<Ket> basis;
    for (const auto& v : vectors) {
        const double n0 = norm(v);
        if (n0 == 0.0) continue;
        Ket w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const cplx c = inner(b, w);
                for (std::size_t i = 0; i < w.dim(); ++i) w[i] -= c * b[i];
            }
        if (norm(w) < drop_tol * n0) continue;
        basis.push_back(fix_phase(normalized(w)));
    }
    return basis;
}

Subspace orthonormal_complement(const std::vector<Ket>& vectors, std::size_t ambient_dim) {
    if (vectors.empty()) throw std::invalid_argument("orthonormal_complement: empty input");
    for (const auto& v : vectors)
        if (v.dim() != ambient_dim)
            throw std::invalid_argument("orthonormal_complement: dimension mismatch");
    std::vector<Ket> span = gram_schmidt(vectors);
    Subspace comp{ambient_dim, {}};
    for (std::size_t e = 0; e < ambient_dim; ++e) {
        Ket w = Ket::basis(ambient_dim, e);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : span) {
                const cplx c = inner(b, w);
                for (std::size_t i = 0; i < w.dim(); ++i) w[i] -= c * b[i];
            }
            for (const auto& b : comp.basis) {
                const cplx c = inner(b, w);
                for (std::size_t i = 0; i < w.dim(); ++i) w[i] -= c * b[i];
            }
        }
        if (norm(w) < 1e-10) continue;
        comp.basis.push_back(fix_phase(normalized(w)));
    }
    return comp;
}

}  // namespace upb::linalg
