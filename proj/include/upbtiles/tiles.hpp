#pragma once

#include <string>
#include <vector>

#include "upbtiles/linalg.hpp"
#include "upbtiles/types.hpp"

namespace upb::tiles {

enum class Variant { DFT, Real };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

enum class TileId { Top = 0, Bottom = 1, Right = 2, Left = 3 };

/// One rectangular tile: one party's level fixed, an interval on the other.
struct Tile {
    int layer_k;              // 1..(d-1)/2
    TileId id;
    linalg::Side fixed_side;  // A for Top/Bottom, B for Right/Left
    int fixed_level;
    int support_lo, support_hi;  // inclusive interval on the varying party

    int support_len() const { return support_hi - support_lo + 1; }
};

/// Nested-layer tile geometry of the d x d grid.
struct TileLayout {
    int d;
    int center;               // (d-1)/2
    std::vector<Tile> tiles;  // layers descending k, order Top, Bottom, Right, Left

    int layers() const { return (d - 1) / 2; }
    std::vector<Tile> layer(int k) const;
};

struct Provenance {
    enum class Kind { Tile, Stopper, Missing, Central } kind;
    int layer_k = 0;  // for Tile/Missing
    TileId tile_id = TileId::Top;
    int kprime = 0;  // within-tile index, 1..2k-1

    std::string to_string() const;
};

/// Bipartite product state, stored with unnormalized integer / root-of-unity
/// amplitudes exactly as constructed.
struct ProductState {
    Ket a, b;
    std::string label;
    Provenance provenance;

    Ket vector() const { return linalg::tensor(a, b); }
    Ket normalized_vector() const { return linalg::normalized(vector()); }
};

struct Upb {
    int d;
    Variant variant;
    std::vector<ProductState> members;  // (d-1)^2 tile states
    ProductState stopper;

    std::vector<ProductState> all() const;  // members + stopper
};

TileLayout layout(int d);

/// 2k-1 states per tile of layer k, 4(2k-1) total.
std::vector<ProductState> tile_states(const TileLayout& lay, int k, Variant variant);

/// The 2d-1 uniform states blocked by the stopper (one per tile, plus central).
std::vector<ProductState> missing_states(const TileLayout& lay);

ProductState stopper(int d);

Upb upb(int d, Variant variant);

/// UPB members (without stopper) plus missing states: d^2 states.
std::vector<ProductState> copb(int d, Variant variant);

/// Uniform ket on the inclusive level interval [lo, hi] of C^d.
Ket uniform_interval(int d, int lo, int hi);

}  // namespace upb::tiles
