#include "upbtiles/states.hpp"

#include <cmath>

namespace upb::states {

using linalg::inner;
using linalg::normalized;
using linalg::outer;
using tiles::Variant;

ComplexMatrix upb_projector(const tiles::Upb& u) {
    const std::size_t n = static_cast<std::size_t>(u.d) * u.d;
    std::vector<Ket> vs;
    for (const auto& s : u.all()) vs.push_back(s.normalized_vector());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (std::abs(inner(vs[i], vs[j])) > 1e-10)
                throw std::runtime_error("upb_projector: input set is not orthogonal");
    ComplexMatrix p(n, n);
    for (const auto& v : vs) p += outer(v, v);
    return p;
}

Ket sub_stopper(int d, int m) {
    const int c = (d - 1) / 2;
    if (m < 0 || c + m > d - 1) throw std::invalid_argument("sub_stopper: m out of range");
    Ket u = tiles::uniform_interval(d, c - m, c + m);
    return linalg::tensor(u, u);
}

std::vector<Ket> entangled_block(int d, int m) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    if (m < 1 || m > (d - 1) / 2) throw std::invalid_argument("layer m out of range");
    const auto lay = tiles::layout(d);
    std::vector<Ket> miss;  // Top, Bottom, Right, Left uniform tile states
    for (const auto& t : lay.layer(m)) {
        Ket fixed = Ket::basis(d, t.fixed_level);
        Ket varying = tiles::uniform_interval(d, t.support_lo, t.support_hi);
        miss.push_back(t.fixed_side == linalg::Side::A ? linalg::tensor(fixed, varying)
                                                       : linalg::tensor(varying, fixed));
    }
    const std::size_t n = miss[0].dim();
    auto combine = [&](double s0, double s1, double s2, double s3) {
        Ket v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = s0 * miss[0][i] + s1 * miss[1][i] + s2 * miss[2][i] + s3 * miss[3][i];
        return v;
    };
    std::vector<Ket> block;
    block.push_back(combine(1, 1, -1, -1));
    block.push_back(combine(1, -1, 1, -1));
    block.push_back(combine(1, -1, -1, 1));
    // completion: alpha * sum(missing) + beta * inner sub-stopper, with the
    // weights fixed by orthogonality to the global stopper:
    //   <S|missing_i> = 2m each, <S|sub_stopper(m-1)> = (2m-1)^2
    const double alpha = (2.0 * m - 1.0) * (2.0 * m - 1.0);
    const double beta = -8.0 * m;
    Ket last = combine(alpha, alpha, alpha, alpha);
    Ket ss = sub_stopper(d, m - 1);
    for (std::size_t i = 0; i < n; ++i) last[i] += beta * ss[i];
    block.push_back(std::move(last));
    return block;
}

DensityMatrix rho_d(int d, Variant variant) {
    ComplexMatrix p = upb_projector(tiles::upb(d, variant));
    ComplexMatrix m = ComplexMatrix::identity(p.rows()) - p;
    m *= cplx{1.0 / (2.0 * (d - 1)), 0.0};
    return {std::move(m), static_cast<std::size_t>(d), static_cast<std::size_t>(d),
            "rho_" + std::to_string(d)};
}

SigmaFactor sigma(int d, int m) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    if (m < 1 || m > (d - 1) / 2) throw std::invalid_argument("layer m out of range");
    const int c = (d - 1) / 2;

    SigmaFactor sf;
    sf.d = d;
    sf.m = m;
    Ket e0 = Ket::basis(d, c - m);
    Ket e1 = normalized(tiles::uniform_interval(d, c - m + 1, c + m - 1));
    Ket e2 = Ket::basis(d, c + m);
    sf.local_basis_a = {e0, e1, e2};
    sf.local_basis_b = {e0, e1, e2};

    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix state(n, n);
    for (const auto& v : entangled_block(d, m)) {
        Ket nv = normalized(v);
        ComplexMatrix p = outer(nv, nv);
        p *= cplx{0.25, 0.0};
        state += p;
    }
    sf.state = {std::move(state), static_cast<std::size_t>(d), static_cast<std::size_t>(d),
                "sigma_" + std::to_string(sf.conventional_index()) + "_d" + std::to_string(d)};
    return sf;
}

namespace {

void check_probability_vector(const std::vector<double>& p, std::size_t expected_len) {
    if (p.size() != expected_len)
        throw std::invalid_argument("probability vector has wrong length");
    double sum = 0.0;
    for (double x : p) {
        if (x < 0.0) throw std::invalid_argument("probability vector has negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("probability vector does not sum to 1");
}

}  // namespace

DensityMatrix sigma_family(int d, const std::vector<double>& p) {
    check_probability_vector(p, static_cast<std::size_t>((d - 1) / 2));
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix acc(n, n);
    for (std::size_t i = 0; i < p.size(); ++i) {
        // p is indexed by the conventional subscript: p[0] weights sigma_1
        // (the outermost layer).
        const int m = (d - 1) / 2 - static_cast<int>(i);
        ComplexMatrix s = sigma(d, m).state.matrix;
        s *= cplx{p[i], 0.0};
        acc += s;
    }
    return {std::move(acc), static_cast<std::size_t>(d), static_cast<std::size_t>(d),
            "sigma_family_d" + std::to_string(d)};
}

std::vector<Ket> entangled_basis(int d) {
    std::vector<Ket> out;
    for (int m = 1; m <= (d - 1) / 2; ++m)
        for (const auto& v : entangled_block(d, m))
            out.push_back(linalg::fix_phase(normalized(v)));
    return out;
}

DensityMatrix rho3_unequal(const std::vector<double>& p) {
    check_probability_vector(p, 4);
    auto basis = entangled_basis(3);
    ComplexMatrix acc(9, 9);
    for (std::size_t i = 0; i < 4; ++i) {
        ComplexMatrix proj = outer(basis[i], basis[i]);
        proj *= cplx{p[i], 0.0};
        acc += proj;
    }
    return {std::move(acc), 3, 3, "rho3_mix"};
}

}  // namespace upb::states
