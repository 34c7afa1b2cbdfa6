#include "upbtiles/discrimination.hpp"

#include <chrono>
#include <cmath>

namespace upb::discrimination {

using linalg::inner;
using linalg::normalized;
using linalg::Side;
using nlohmann::json;
using tiles::ProductState;
using tiles::Variant;
using verify::Certificate;

std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::UCPB: return "ucpb";
        case SetKind::CompletableSet: return "completable";
        case SetKind::UPB: return "upb";
        case SetKind::COPB: return "copb";
    }
    return "?";
}

StateSet make_state_set(std::vector<ProductState> states, int d, SetKind kind,
                        std::string label) {
    std::vector<Ket> vs;
    for (const auto& s : states) vs.push_back(s.normalized_vector());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (std::abs(inner(vs[i], vs[j])) > 1e-12)
                throw std::invalid_argument("state set is not pairwise orthogonal");
    return {std::move(states), d, kind, std::move(label)};
}

StateSet ucpb_set(int d, Variant variant) {
    auto u = tiles::upb(d, variant);
    std::vector<ProductState> chosen;
    for (const auto& s : u.members)
        if (s.provenance.kprime == s.provenance.layer_k) chosen.push_back(s);
    chosen.push_back(u.stopper);
    return make_state_set(std::move(chosen), d, SetKind::UCPB,
                          "ucpb_d" + std::to_string(d) + "_" + tiles::to_string(variant));
}

StateSet completable_set(int d, Variant variant) {
    auto u = tiles::upb(d, variant);
    const int outer = (d - 1) / 2;
    const int kmax = 2 * outer - 1;
    std::vector<ProductState> kept;
    for (const auto& s : u.members) {
        const auto& p = s.provenance;
        const bool dropped = p.layer_k == outer && p.kprime == kmax &&
                             (p.tile_id == tiles::TileId::Bottom ||
                              p.tile_id == tiles::TileId::Left);
        if (!dropped) kept.push_back(s);
    }
    return make_state_set(std::move(kept), d, SetKind::CompletableSet,
                          "completable_d" + std::to_string(d) + "_" +
                              tiles::to_string(variant));
}

StateSet nine_state_set() { return ucpb_set(5, Variant::Real); }

StateSet fourteen_state_set() { return completable_set(5, Variant::Real); }

namespace {

/// Orthonormal Hermitian basis of d x d matrices under <X,Y> = tr(X^dag Y):
/// diagonal units, then (E_kl + E_lk)/sqrt(2) and i(E_kl - E_lk)/sqrt(2).
std::vector<ComplexMatrix> hermitian_basis(std::size_t d) {
    std::vector<ComplexMatrix> out;
    for (std::size_t k = 0; k < d; ++k) {
        ComplexMatrix m(d, d);
        m(k, k) = 1.0;
        out.push_back(std::move(m));
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k + 1; l < d; ++l) {
            ComplexMatrix s(d, d);
            s(k, l) = r;
            s(l, k) = r;
            out.push_back(std::move(s));
            ComplexMatrix a(d, d);
            a(k, l) = cplx{0.0, r};
            a(l, k) = cplx{0.0, -r};
            out.push_back(std::move(a));
        }
    return out;
}

}  // namespace

OpmAnalysis opm_nullspace(const StateSet& set, Side party) {
    const std::size_t d = static_cast<std::size_t>(set.d);
    const std::size_t nb = d * d;  // real dimension of Hermitian space
    const auto hb = hermitian_basis(d);

    std::vector<Ket> own, other;
    for (const auto& s : set.states) {
        own.push_back(normalized(party == Side::A ? s.a : s.b));
        other.push_back(normalized(party == Side::A ? s.b : s.a));
    }

    // real constraint rows over the coordinates of E in the Hermitian basis
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < own.size(); ++i)
        for (std::size_t j = i + 1; j < own.size(); ++j) {
            if (std::abs(inner(other[i], other[j])) < 1e-12) continue;
            std::vector<double> re(nb), im(nb);
            for (std::size_t t = 0; t < nb; ++t) {
                const cplx c = inner(own[i], linalg::apply(hb[t], own[j]));
                re[t] = c.real();
                im[t] = c.imag();
            }
            rows.push_back(std::move(re));
            rows.push_back(std::move(im));
        }

    // kernel of the constraint matrix via the spectrum of C^T C
    ComplexMatrix ctc(nb, nb);
    for (const auto& row : rows)
        for (std::size_t s = 0; s < nb; ++s)
            for (std::size_t t = 0; t < nb; ++t) ctc(s, t) += row[s] * row[t];
    auto eig = linalg::hermitian_eig(ctc);
    const double lmax = std::max(std::abs(eig.eigenvalues.back()), 1.0);

    OpmAnalysis out;
    out.party = party;
    for (std::size_t idx = 0; idx < eig.eigenvalues.size(); ++idx) {
        if (eig.eigenvalues[idx] > 1e-12 * lmax) continue;
        ComplexMatrix e(d, d);
        for (std::size_t t = 0; t < nb; ++t) {
            ComplexMatrix term = hb[t];
            term *= eig.eigenvectors[idx][t];  // real up to rounding
            e += term;
        }
        // re-hermitize against rounding in the eigenvector phases
        ComplexMatrix h = e;
        h += linalg::adjoint(e);
        h *= cplx{0.5, 0.0};
        out.basis.push_back(std::move(h));
    }
    out.nullspace_dim = out.basis.size();
    if (out.nullspace_dim == 1) {
        const ComplexMatrix& e = out.basis.front();
        ComplexMatrix dev = e;
        ComplexMatrix id = ComplexMatrix::identity(d);
        id *= linalg::trace(e) / static_cast<double>(d);
        dev -= id;
        out.trivial = linalg::frobenius_norm(dev) < 1e-9 * linalg::frobenius_norm(e);
    }
    return out;
}

namespace {

json opm_json(const OpmAnalysis& a) {
    return {{"party", a.party == Side::A ? "A" : "B"},
            {"nullspace_dim", a.nullspace_dim},
            {"trivial", a.trivial}};
}

}  // namespace

Certificate check_strong_indistinguishability(const StateSet& set) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.claim = "strong_indistinguishability(" + set.label + ")";
    cert.confidence = "proof";
    cert.config = {{"d", set.d}, {"count", set.states.size()}};
    auto a = opm_nullspace(set, Side::A);
    auto b = opm_nullspace(set, Side::B);
    cert.status = (a.trivial && b.trivial) ? "pass" : "fail";
    cert.witnesses = {{"party_a", opm_json(a)}, {"party_b", opm_json(b)}};
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return cert;
}

Certificate check_completability(const StateSet& set, Variant variant) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.claim = "completable(" + set.label + ")";
    cert.confidence = "proof";
    const int d = set.d;
    const std::size_t want = static_cast<std::size_t>(d) * d;
    cert.config = {{"d", d}, {"count", set.states.size()}};

    std::vector<ProductState> full = set.states;
    std::vector<Ket> vs;
    for (const auto& s : full) vs.push_back(s.normalized_vector());
    auto orthogonal_to_all = [&](const Ket& v) {
        for (const auto& w : vs)
            if (std::abs(inner(w, v)) > 1e-10) return false;
        return true;
    };
    for (const auto& cand : tiles::copb(d, variant)) {
        if (full.size() == want) break;
        Ket v = cand.normalized_vector();
        if (orthogonal_to_all(v)) {
            full.push_back(cand);
            vs.push_back(std::move(v));
        }
    }
    // fallback: hunt for product vectors in whatever subspace remains
    verify::SeesawConfig cfg;
    cfg.restarts = 50;
    while (full.size() < want) {
        auto comp = linalg::orthonormal_complement(vs, want);
        auto found = verify::search_product_in_subspace(comp, d, d, cfg, "completion");
        if (found.witnesses["result"] != "found") break;
        ProductState ps;
        ps.a = Ket(d);
        ps.b = Ket(d);
        for (int i = 0; i < d; ++i) {
            const auto& wa = found.witnesses["witness_a"]["amp"][i];
            const auto& wb = found.witnesses["witness_b"]["amp"][i];
            ps.a[i] = cplx{wa[0].get<double>(), wa[1].get<double>()};
            ps.b[i] = cplx{wb[0].get<double>(), wb[1].get<double>()};
        }
        ps.label = "completion" + std::to_string(full.size() + 1);
        Ket v = ps.normalized_vector();
        if (!orthogonal_to_all(v)) break;
        full.push_back(std::move(ps));
        vs.push_back(std::move(v));
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            worst = std::max(worst, std::abs(inner(vs[i], vs[j])));
    json labels = json::array();
    for (const auto& s : full) labels.push_back(s.label);
    cert.status = (full.size() == want && worst < 1e-9) ? "pass" : "fail";
    // a failed greedy+seesaw hunt is evidence of uncompletability, not proof
    if (cert.status == "fail") cert.confidence = "evidence";
    cert.witnesses = {{"completion_size", full.size()},
                      {"completion_labels", labels},
                      {"max_overlap", worst}};
    cert.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    return cert;
}

}  // namespace upb::discrimination
