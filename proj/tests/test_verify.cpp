#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "upbtiles/verify.hpp"

using namespace upb;
using namespace upb::verify;
using tiles::Variant;

namespace {

// upb(5) with the central |2>|2> in place of the stopper: still 17 pairwise
// orthogonal product states, but extendible (psi17..psi24 all fit).
std::vector<tiles::ProductState> control_set_17() {
    auto u = tiles::upb(5, Variant::Real);
    auto out = u.members;
    out.push_back(tiles::missing_states(tiles::layout(5)).back());
    return out;
}

SeesawConfig quick_cfg(int restarts = 40) {
    SeesawConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = 0;
    return cfg;
}

Subspace complement_of(const std::vector<tiles::ProductState>& states, int d) {
    std::vector<Ket> vs;
    for (const auto& s : states) vs.push_back(s.normalized_vector());
    return linalg::orthonormal_complement(vs, static_cast<std::size_t>(d) * d);
}

}  // namespace

TEST_CASE("check_orthogonality on the published sets") {
    CHECK(check_orthogonality(tiles::upb(3, Variant::Real).all()).passed());
    CHECK(check_orthogonality(tiles::upb(5, Variant::Real).all()).passed());
    CHECK(check_orthogonality(tiles::upb(7, Variant::DFT).all()).passed());

    auto bad = tiles::upb(5, Variant::Real).all();
    bad.push_back(tiles::missing_states(tiles::layout(5)).front());  // psi17
    auto cert = check_orthogonality(bad);
    CHECK(cert.status == "fail");
    REQUIRE(cert.witnesses.contains("worst_pair"));
    const auto pair = cert.witnesses["worst_pair"];
    CHECK((pair[0] == "S" || pair[1] == "S"));
}

TEST_CASE("check_completeness") {
    CHECK(check_completeness(tiles::copb(3, Variant::Real), 3).passed());
    CHECK(check_completeness(tiles::copb(5, Variant::Real), 5).passed());
    auto members_only = tiles::upb(5, Variant::Real).members;
    auto cert = check_completeness(members_only, 5);
    CHECK(cert.status == "fail");
    CHECK(cert.witnesses["count"] == 16);
}

TEST_CASE("exhaustive unextendibility: upb passes, control set fails") {
    auto c3 = check_unextendible_exhaustive(tiles::upb(3, Variant::Real));
    CHECK(c3.passed());
    CHECK(c3.confidence == "proof");
    CHECK(c3.witnesses["nodes_examined"].get<std::uint64_t>() <= 64);

    for (auto v : {Variant::Real, Variant::DFT}) {
        auto c5 = check_unextendible_exhaustive(tiles::upb(5, v));
        CHECK(c5.passed());
        CHECK(c5.confidence == "proof");
        CHECK(c5.witnesses["nodes_examined"].get<std::uint64_t>() <= (1u << 18));
    }

    auto cert = check_unextendible_exhaustive(control_set_17(), 5, "control17");
    CHECK(cert.status == "fail");
    CHECK(cert.witnesses["max_member_overlap"].get<double>() < 1e-10);
    CHECK(cert.witnesses["complement_overlap"].get<double>() > 1.0 - 1e-10);
}

TEST_CASE("exhaustive search budget exhaustion downgrades to inconclusive") {
    auto cert = check_unextendible_exhaustive(tiles::upb(5, Variant::Real), 100);
    CHECK(cert.status == "inconclusive");
    CHECK(cert.confidence == "evidence");
}

TEST_CASE("seesaw finds a product state in a trivially product subspace") {
    // span{|00>, |01>} in C2 (x) C2
    Subspace s;
    s.ambient_dim = 4;
    s.basis = {Ket::basis(4, 0), Ket::basis(4, 1)};
    auto cert = search_product_in_subspace(s, 2, 2, quick_cfg(5));
    CHECK(cert.witnesses["result"] == "found");
    CHECK(cert.witnesses["best_objective"].get<double>() > 1.0 - 1e-10);
}

TEST_CASE("seesaw reports absence on H_E of upb(5)") {
    auto he = complement_of(tiles::upb(5, Variant::Real).all(), 5);
    REQUIRE(he.basis.size() == 8);
    auto cert = search_product_in_subspace(he, 5, 5, quick_cfg(), "he_d5");
    CHECK(cert.witnesses["result"] == "absent");
    CHECK(cert.witnesses["best_objective"].get<double>() < 1.0 - 1e-3);
    CHECK(cert.confidence == "evidence");
}

TEST_CASE("seesaw and exhaustive search agree on the extendible control set") {
    auto states = control_set_17();
    auto ex = check_unextendible_exhaustive(states, 5, "control17");
    REQUIRE(ex.status == "fail");
    auto comp = complement_of(states, 5);
    auto ss = search_product_in_subspace(comp, 5, 5, quick_cfg(), "control17_comp");
    REQUIRE(ss.witnesses["result"] == "found");
    // both witnesses are genuine product states inside the complement
    for (const auto* cert : {&ex, &ss}) {
        Ket a(5), b(5);
        const auto& wa = (*cert).witnesses["witness_a"]["amp"];
        const auto& wb = (*cert).witnesses["witness_b"]["amp"];
        for (int i = 0; i < 5; ++i) {
            a[i] = cplx{wa[i][0].get<double>(), wa[i][1].get<double>()};
            b[i] = cplx{wb[i][0].get<double>(), wb[i][1].get<double>()};
        }
        Ket w = linalg::tensor(a, b);
        double inside = 0.0;
        for (const auto& e : comp.basis) inside += std::norm(linalg::inner(e, w));
        CHECK(inside > 1.0 - 1e-8);
    }
}

TEST_CASE("check_ppt") {
    auto c5 = check_ppt(states::rho_d(5, Variant::Real));
    CHECK(c5.passed());
    auto spectrum = c5.witnesses["pt_spectrum"].get<std::vector<double>>();
    int eighth = 0;
    for (double v : spectrum)
        if (std::abs(v - 0.125) < 1e-9) ++eighth;
    CHECK(eighth == 8);

    CHECK(check_ppt(states::sigma(5, 1).state).passed());

    auto bad = check_ppt(states::rho3_unequal({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}));
    CHECK(bad.status == "fail");
    CHECK(bad.witnesses["min_eigenvalue"].get<double>() < -1e-6);
}

TEST_CASE("check_rank") {
    CHECK(check_rank(states::rho_d(5, Variant::Real), 8).passed());
    CHECK(check_rank(states::sigma(7, 2).state, 4).passed());
    CHECK(check_rank(states::rho_d(9, Variant::DFT), 16).passed());
    CHECK(check_rank(states::rho_d(5, Variant::Real), 7).status == "fail");
}

TEST_CASE("check_decomposition passes for d=5..9 and flags injected defects") {
    CHECK(check_decomposition(5, Variant::Real).passed());
    CHECK(check_decomposition(7, Variant::Real).passed());
    CHECK(check_decomposition(9, Variant::DFT).passed());

    auto rho = states::rho_d(5, Variant::Real);
    std::vector<states::DensityMatrix> factors = {states::sigma(5, 1).state,
                                                  states::sigma(5, 2).state};
    factors[0].matrix(0, 0) += 1e-3;  // shift one entry
    auto cert = check_decomposition(rho, factors, 0.5);
    CHECK(cert.status == "fail");
    CHECK(cert.witnesses["residual"].get<double>() > 1e-4);
}

TEST_CASE("check_extreme_rank4") {
    CHECK(check_extreme_rank4(states::sigma(5, 1)).passed());
    CHECK(check_extreme_rank4(states::sigma(5, 2)).passed());
    CHECK(check_extreme_rank4(states::sigma(7, 3)).passed());

    states::SigmaFactor fake = states::sigma(5, 1);
    fake.state = states::rho_d(5, Variant::Real);  // rank 8, not 4
    auto cert = check_extreme_rank4(fake);
    CHECK(cert.status == "fail");
    CHECK(cert.witnesses["rank"] == 8);
}

TEST_CASE("check_edge: rho_3 and a sigma mixture are edge, white noise is not") {
    auto c3 = check_edge(states::rho_d(3, Variant::Real), quick_cfg(30));
    CHECK(c3.passed());
    CHECK(c3.witnesses["min_objective"].get<double>() > 1e-6);

    auto mix = states::sigma_family(5, {0.3, 0.7});
    CHECK(check_edge(mix, quick_cfg(20)).passed());

    states::DensityMatrix noise{ComplexMatrix::identity(25), 5, 5, "white_noise"};
    noise.matrix *= cplx{1.0 / 25.0, 0.0};
    auto bad = check_edge(noise, quick_cfg(5));
    CHECK(bad.status == "fail");
    CHECK(bad.witnesses["min_objective"].get<double>() < 1e-10);
    CHECK(bad.witnesses.contains("witness_a"));
}

TEST_CASE("check_edge rejects NPT input") {
    auto npt = states::rho3_unequal({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6});
    CHECK_THROWS_AS(check_edge(npt, quick_cfg(2)), std::invalid_argument);
}

TEST_CASE("seesaw determinism: same seed, same certificate payload") {
    auto he = complement_of(tiles::upb(5, Variant::Real).all(), 5);
    auto a = search_product_in_subspace(he, 5, 5, quick_cfg(10), "he_d5");
    auto b = search_product_in_subspace(he, 5, 5, quick_cfg(10), "he_d5");
    CHECK(a.witnesses.dump() == b.witnesses.dump());

    auto e1 = check_edge(states::rho_d(3, Variant::Real), quick_cfg(10));
    auto e2 = check_edge(states::rho_d(3, Variant::Real), quick_cfg(10));
    CHECK(e1.witnesses.dump() == e2.witnesses.dump());
}

TEST_CASE("check_cardinality_constraint records the rank arithmetic") {
    auto cert = check_cardinality_constraint(5);
    CHECK(cert.passed());
    const auto& table = cert.witnesses["table"];
    REQUIRE(table.size() == 5);
    CHECK(table[0]["n"] == 17);
    CHECK(table[0]["ruled_out"] == false);
    CHECK(table[1]["n"] == 18);
    CHECK(table[1]["ruled_out"] == true);
    CHECK(table[1]["implied_factor_rank"] == 3);
    CHECK(table[4]["n"] == 21);
    CHECK(table[4]["ruled_out"] == false);
    CHECK_THROWS_AS(check_cardinality_constraint(7), std::invalid_argument);
}

TEST_CASE("mixture_scan is empirical and deterministic") {
    auto r1 = mixture_scan(3, 25, 7);
    auto r2 = mixture_scan(3, 25, 7);
    CHECK(r1.dump() == r2.dump());
    // random unequal d=3 mixtures are NPT with probability 1
    CHECK(r1["npt_fraction"].get<double>() == 1.0);
    CHECK(r1["min_pt_eigenvalues"].size() == 25);

    auto r5 = mixture_scan(5, 5, 1);
    CHECK(r5["samples"] == 5);
}
