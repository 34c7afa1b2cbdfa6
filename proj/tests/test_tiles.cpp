#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "upbtiles/tiles.hpp"

using namespace upb;
using namespace upb::tiles;
using linalg::inner;
using linalg::norm;

namespace {

// |levels chosen by signs| e.g. ket(5, {{1,1.0},{2,-1.0}}) = |1-2>
Ket ket(int d, std::initializer_list<std::pair<int, double>> terms) {
    Ket k(d);
    for (auto [lvl, amp] : terms) k[lvl] = amp;
    return k;
}

bool same_state(const ProductState& s, const Ket& a, const Ket& b) {
    Ket v = s.vector();
    Ket w = linalg::tensor(a, b);
    // equal up to global phase: |<v|w>| == |v||w|
    return std::abs(std::abs(inner(v, w)) - norm(v) * norm(w)) < 1e-10;
}

double max_off_diagonal_overlap(const std::vector<ProductState>& states) {
    double worst = 0.0;
    std::vector<Ket> vs;
    for (const auto& s : states) vs.push_back(s.normalized_vector());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            worst = std::max(worst, std::abs(inner(vs[i], vs[j])));
    return worst;
}

}  // namespace

TEST_CASE("layout rejects invalid d") {
    CHECK_THROWS_AS(layout(4), std::invalid_argument);
    CHECK_THROWS_AS(layout(1), std::invalid_argument);
    CHECK_THROWS_AS(layout(2), std::invalid_argument);
}

TEST_CASE("layout d=3: four 1x2 tiles around the central cell") {
    auto lay = layout(3);
    CHECK(lay.center == 1);
    REQUIRE(lay.tiles.size() == 4);
    for (const auto& t : lay.tiles) CHECK(t.support_len() == 2);
    // Top: A-level 0 over B [0,1]
    CHECK(lay.tiles[0].fixed_level == 0);
    CHECK(lay.tiles[0].support_lo == 0);
    CHECK(lay.tiles[0].support_hi == 1);
    // Bottom: A-level 2 over B [1,2]
    CHECK(lay.tiles[1].fixed_level == 2);
    CHECK(lay.tiles[1].support_lo == 1);
}

TEST_CASE("layout d=5 matches the two-layer figure") {
    auto lay = layout(5);
    REQUIRE(lay.tiles.size() == 8);
    auto outer = lay.layer(2);
    auto inner = lay.layer(1);
    REQUIRE(outer.size() == 4);
    REQUIRE(inner.size() == 4);
    for (const auto& t : outer) CHECK(t.support_len() == 4);
    for (const auto& t : inner) CHECK(t.support_len() == 2);
    CHECK(outer[0].fixed_level == 0);   // Top row
    CHECK(outer[1].fixed_level == 4);   // Bottom row
    CHECK(inner[0].fixed_level == 1);
    CHECK(inner[1].fixed_level == 3);
}

TEST_CASE("tile cells plus central cell cover the grid exactly once") {
    for (int d = 3; d <= 11; d += 2) {
        auto lay = layout(d);
        std::vector<int> cover(d * d, 0);
        for (const auto& t : lay.tiles)
            for (int j = t.support_lo; j <= t.support_hi; ++j) {
                int row = t.fixed_side == linalg::Side::A ? t.fixed_level : j;
                int col = t.fixed_side == linalg::Side::A ? j : t.fixed_level;
                cover[row * d + col]++;
            }
        cover[lay.center * d + lay.center]++;
        for (int c : cover) CHECK(c == 1);
    }
}

TEST_CASE("d=5 real inner layer reproduces psi13..psi16") {
    auto lay = layout(5);
    auto st = tile_states(lay, 1, Variant::Real);
    REQUIRE(st.size() == 4);
    CHECK(same_state(st[0], ket(5, {{1, 1.0}}), ket(5, {{1, 1.0}, {2, -1.0}})));
    CHECK(same_state(st[1], ket(5, {{3, 1.0}}), ket(5, {{2, 1.0}, {3, -1.0}})));
    CHECK(same_state(st[2], ket(5, {{1, 1.0}, {2, -1.0}}), ket(5, {{3, 1.0}})));
    CHECK(same_state(st[3], ket(5, {{2, 1.0}, {3, -1.0}}), ket(5, {{1, 1.0}})));
}

TEST_CASE("d=5 real outer layer reproduces psi1..psi12") {
    auto lay = layout(5);
    auto st = tile_states(lay, 2, Variant::Real);
    REQUIRE(st.size() == 12);
    // psi1 = |0>|0-1+2-3>, psi2 = |0>|0+1-2-3>, psi3 = |0>|0-1-2+3>
    CHECK(same_state(st[0], ket(5, {{0, 1.0}}),
                     ket(5, {{0, 1.0}, {1, -1.0}, {2, 1.0}, {3, -1.0}})));
    CHECK(same_state(st[1], ket(5, {{0, 1.0}}),
                     ket(5, {{0, 1.0}, {1, 1.0}, {2, -1.0}, {3, -1.0}})));
    CHECK(same_state(st[2], ket(5, {{0, 1.0}}),
                     ket(5, {{0, 1.0}, {1, -1.0}, {2, -1.0}, {3, 1.0}})));
    // psi10 = |1-2+3-4>|0>
    CHECK(same_state(st[9], ket(5, {{1, 1.0}, {2, -1.0}, {3, 1.0}, {4, -1.0}}),
                     ket(5, {{0, 1.0}})));
}

TEST_CASE("d=7 DFT layer-3 states: 20 states, pairwise orthogonal, stopper-orthogonal") {
    auto lay = layout(7);
    auto st = tile_states(lay, 3, Variant::DFT);
    REQUIRE(st.size() == 20);
    CHECK(max_off_diagonal_overlap(st) < 1e-12);
    Ket s = stopper(7).normalized_vector();
    for (const auto& ps : st)
        CHECK(std::abs(inner(s, ps.normalized_vector())) < 1e-12);
}

TEST_CASE("missing states d=3 match the published list") {
    auto ms = missing_states(layout(3));
    REQUIRE(ms.size() == 5);
    CHECK(same_state(ms[0], ket(3, {{0, 1.0}}), ket(3, {{0, 1.0}, {1, 1.0}})));
    CHECK(same_state(ms[1], ket(3, {{2, 1.0}}), ket(3, {{1, 1.0}, {2, 1.0}})));
    CHECK(same_state(ms[2], ket(3, {{0, 1.0}, {1, 1.0}}), ket(3, {{2, 1.0}})));
    CHECK(same_state(ms[3], ket(3, {{1, 1.0}, {2, 1.0}}), ket(3, {{0, 1.0}})));
    CHECK(same_state(ms[4], ket(3, {{1, 1.0}}), ket(3, {{1, 1.0}})));
}

TEST_CASE("missing states d=5 end with the central |2>|2>") {
    auto ms = missing_states(layout(5));
    REQUIRE(ms.size() == 9);
    CHECK(ms.back().label == "psi25");
    CHECK(same_state(ms.back(), ket(5, {{2, 1.0}}), ket(5, {{2, 1.0}})));
    CHECK(same_state(ms[0], ket(5, {{0, 1.0}}),
                     ket(5, {{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}})));
}

TEST_CASE("missing state count and stopper overlap for d=3..11") {
    for (int d = 3; d <= 11; d += 2) {
        auto ms = missing_states(layout(d));
        CHECK(ms.size() == static_cast<std::size_t>(2 * d - 1));
        Ket s = stopper(d).vector();
        for (const auto& m : ms)
            CHECK(std::abs(inner(s, m.vector())) > 0.5);
    }
}

TEST_CASE("stopper basics") {
    auto s3 = stopper(3);
    CHECK(std::abs(inner(s3.vector(), s3.vector()) - 9.0) < 1e-12);
    auto s5 = stopper(5);
    CHECK(std::abs(inner(s5.vector(), s5.vector()) - 25.0) < 1e-12);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(s5.a[i] - 1.0) < 1e-15);
}

TEST_CASE("upb cardinality (d-1)^2+1") {
    CHECK(tiles::upb(3, Variant::Real).members.size() == 4);
    CHECK(tiles::upb(5, Variant::Real).members.size() == 16);
    CHECK(tiles::upb(7, Variant::DFT).members.size() == 36);
    CHECK(tiles::upb(9, Variant::DFT).members.size() == 64);
}

TEST_CASE("upb Gram matrix is diagonal for both variants, d=3..11") {
    for (int d = 3; d <= 11; d += 2)
        for (auto v : {Variant::DFT, Variant::Real})
            CHECK(max_off_diagonal_overlap(tiles::upb(d, v).all()) < 1e-12);
}

TEST_CASE("within-tile basis choice does not matter for cross-tile orthogonality") {
    // Randomized orthogonal within-tile rows: rotate the d=7 DFT layer states
    // by a random unitary inside each tile block and re-check the full Gram.
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    auto u = tiles::upb(7, Variant::DFT);
    std::vector<Ket> vs;
    for (const auto& m : u.members) vs.push_back(m.normalized_vector());

    // random complex mixing within each tile's block of members
    std::size_t idx = 0;
    auto lay = layout(7);
    for (int k = lay.layers(); k >= 1; --k)
        for (int t = 0; t < 4; ++t) {
            const std::size_t blk = 2 * k - 1;
            std::vector<Ket> block(vs.begin() + idx, vs.begin() + idx + blk);
            std::vector<Ket> mixed;
            for (std::size_t r = 0; r < blk; ++r) {
                Ket m(block[0].dim());
                for (std::size_t ccol = 0; ccol < blk; ++ccol) {
                    cplx w{g(rng), g(rng)};
                    for (std::size_t i = 0; i < m.dim(); ++i) m[i] += w * block[ccol][i];
                }
                mixed.push_back(m);
            }
            auto on = linalg::gram_schmidt(mixed);
            REQUIRE(on.size() == blk);
            for (std::size_t r = 0; r < blk; ++r) vs[idx + r] = on[r];
            idx += blk;
        }
    vs.push_back(u.stopper.normalized_vector());

    double worst = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            worst = std::max(worst, std::abs(inner(vs[i], vs[j])));
    CHECK(worst < 1e-10);
}

TEST_CASE("missing states are orthogonal to all members but not the stopper") {
    for (int d : {3, 5, 7}) {
        auto u = tiles::upb(d, Variant::Real);
        auto ms = missing_states(layout(d));
        Ket s = u.stopper.vector();
        for (const auto& m : ms) {
            Ket mv = m.normalized_vector();
            for (const auto& mem : u.members)
                CHECK(std::abs(inner(mv, mem.normalized_vector())) < 1e-12);
            CHECK(std::abs(inner(s, m.vector())) > 0.5);
        }
    }
}

TEST_CASE("copb is complete: d^2 states of full Gram rank") {
    for (int d = 3; d <= 11; d += 2)
        for (auto v : {Variant::DFT, Variant::Real}) {
            auto states = copb(d, v);
            REQUIRE(states.size() == static_cast<std::size_t>(d * d));
            ComplexMatrix gram(states.size(), states.size());
            std::vector<Ket> vs;
            for (const auto& s : states) vs.push_back(s.normalized_vector());
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = 0; j < vs.size(); ++j)
                    gram(i, j) = inner(vs[i], vs[j]);
            CHECK(linalg::numeric_rank(gram, 1e-9) == states.size());
        }
}

TEST_CASE("copb d=3 is the 9-state basis, d=5 the 25-state basis") {
    CHECK(copb(3, Variant::Real).size() == 9);
    CHECK(copb(5, Variant::Real).size() == 25);
    CHECK(max_off_diagonal_overlap(copb(5, Variant::Real)) < 1e-12);
}
