#include "upbtiles/tiles.hpp"

#include <cmath>
#include <numbers>

namespace upb::tiles {

std::string to_string(Variant v) { return v == Variant::DFT ? "dft" : "real"; }

Variant variant_from_string(const std::string& s) {
    if (s == "dft") return Variant::DFT;
    if (s == "real") return Variant::Real;
    throw std::invalid_argument("unknown variant: " + s);
}

std::string Provenance::to_string() const {
    static const char* tile_names[] = {"top", "bottom", "right", "left"};
    switch (kind) {
        case Kind::Stopper:
            return "stopper";
        case Kind::Central:
            return "central";
        case Kind::Missing:
            return "missing:k=" + std::to_string(layer_k) + ":" +
                   tile_names[static_cast<int>(tile_id)];
        case Kind::Tile:
        default:
            return "tile:k=" + std::to_string(layer_k) + ":" +
                   tile_names[static_cast<int>(tile_id)] + ":k'=" + std::to_string(kprime);
    }
}

std::vector<Tile> TileLayout::layer(int k) const {
    std::vector<Tile> out;
    for (const auto& t : tiles)
        if (t.layer_k == k) out.push_back(t);
    return out;
}

std::vector<ProductState> Upb::all() const {
    std::vector<ProductState> out = members;
    out.push_back(stopper);
    return out;
}

Ket uniform_interval(int d, int lo, int hi) {
    Ket k(d);
    for (int i = lo; i <= hi; ++i) k[i] = 1.0;
    return k;
}

TileLayout layout(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    const int c = (d - 1) / 2;
    TileLayout lay{d, c, {}};
    for (int k = c; k >= 1; --k) {
        lay.tiles.push_back({k, TileId::Top, linalg::Side::A, c - k, c - k, c + k - 1});
        lay.tiles.push_back({k, TileId::Bottom, linalg::Side::A, c + k, c - k + 1, c + k});
        lay.tiles.push_back({k, TileId::Right, linalg::Side::B, c + k, c - k, c + k - 1});
        lay.tiles.push_back({k, TileId::Left, linalg::Side::B, c - k, c - k + 1, c + k});
    }
    return lay;
}

namespace {

// Rows orthogonal to the all-ones vector on a support of length len,
// pairwise orthogonal, as unnormalized amplitude lists.
std::vector<std::vector<cplx>> within_tile_rows(int len, Variant variant) {
    std::vector<std::vector<cplx>> rows;
    if (variant == Variant::DFT) {
        const int k = len / 2;
        for (int kp = 1; kp <= len - 1; ++kp) {
            std::vector<cplx> row(len);
            for (int j = 0; j < len; ++j) {
                const double ang = std::numbers::pi * j * kp / k;
                row[j] = {std::cos(ang), std::sin(ang)};
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }
    if (len == 2) {
        rows.push_back({1.0, -1.0});
    } else if (len == 4) {
        // the +/-1 rows of the d=5 construction, in their published order
        rows.push_back({1.0, -1.0, 1.0, -1.0});
        rows.push_back({1.0, 1.0, -1.0, -1.0});
        rows.push_back({1.0, -1.0, -1.0, 1.0});
    } else {
        // Helmert rows: (1,-1,0,...), (1,1,-2,0,...), ..., (1,...,1,-(len-1))
        for (int m = 1; m <= len - 1; ++m) {
            std::vector<cplx> row(len);
            for (int j = 0; j < m; ++j) row[j] = 1.0;
            row[m] = -static_cast<double>(m);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ProductState make_tile_state(const TileLayout& lay, const Tile& t,
                             const std::vector<cplx>& row, int kprime) {
    Ket varying(lay.d);
    for (int j = 0; j < t.support_len(); ++j) varying[t.support_lo + j] = row[j];
    Ket fixed = Ket::basis(lay.d, t.fixed_level);
    ProductState st;
    if (t.fixed_side == linalg::Side::A) {
        st.a = fixed;
        st.b = varying;
    } else {
        st.a = varying;
        st.b = fixed;
    }
    st.provenance = {Provenance::Kind::Tile, t.layer_k, t.id, kprime};
    return st;
}

}  // namespace

std::vector<ProductState> tile_states(const TileLayout& lay, int k, Variant variant) {
    if (k < 1 || k > lay.layers()) throw std::invalid_argument("layer k out of range");
    std::vector<ProductState> out;
    for (const auto& t : lay.layer(k)) {
        const auto rows = within_tile_rows(t.support_len(), variant);
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.push_back(make_tile_state(lay, t, rows[i], static_cast<int>(i) + 1));
    }
    return out;
}

std::vector<ProductState> missing_states(const TileLayout& lay) {
    std::vector<ProductState> out;
    for (const auto& t : lay.tiles) {
        Ket fixed = Ket::basis(lay.d, t.fixed_level);
        Ket varying = uniform_interval(lay.d, t.support_lo, t.support_hi);
        ProductState st;
        if (t.fixed_side == linalg::Side::A) {
            st.a = fixed;
            st.b = varying;
        } else {
            st.a = varying;
            st.b = fixed;
        }
        st.provenance = {Provenance::Kind::Missing, t.layer_k, t.id, 0};
        out.push_back(std::move(st));
    }
    ProductState central;
    central.a = Ket::basis(lay.d, lay.center);
    central.b = Ket::basis(lay.d, lay.center);
    central.provenance = {Provenance::Kind::Central, 0, TileId::Top, 0};
    out.push_back(std::move(central));

    const int t0 = (lay.d - 1) * (lay.d - 1);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i].label = "psi" + std::to_string(t0 + 1 + i);
    return out;
}

ProductState stopper(int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("d must be odd and >= 3");
    ProductState st;
    st.a = uniform_interval(d, 0, d - 1);
    st.b = st.a;
    st.label = "S";
    st.provenance = {Provenance::Kind::Stopper, 0, TileId::Top, 0};
    return st;
}

Upb upb(int d, Variant variant) {
    const TileLayout lay = layout(d);
    Upb u{d, variant, {}, stopper(d)};
    for (int k = lay.layers(); k >= 1; --k) {
        auto layer = tile_states(lay, k, variant);
        u.members.insert(u.members.end(), layer.begin(), layer.end());
    }
    for (std::size_t i = 0; i < u.members.size(); ++i)
        u.members[i].label = "psi" + std::to_string(i + 1);
    return u;
}

std::vector<ProductState> copb(int d, Variant variant) {
    Upb u = upb(d, variant);
    std::vector<ProductState> out = std::move(u.members);
    auto missing = missing_states(layout(d));
    out.insert(out.end(), missing.begin(), missing.end());
    return out;
}

}  // namespace upb::tiles
