#pragma once

#include <string>
#include <vector>

#include "upbtiles/tiles.hpp"

namespace upb::states {

struct DensityMatrix {
    ComplexMatrix matrix;
    std::size_t dA = 0, dB = 0;
    std::string label;
};

/// Rank-4 layer state together with the 3x3 local product subspace
/// that carries its range. m counts layers from the center outward;
/// the conventional subscript of sigma is (d-1)/2 - m + 1.
struct SigmaFactor {
    int d = 0;
    int m = 0;
    std::vector<Ket> local_basis_a;  // {e0, e1, e2}
    std::vector<Ket> local_basis_b;
    DensityMatrix state;

    int conventional_index() const { return (d - 1) / 2 - m + 1; }
};

/// Projector onto the span of the UPB members plus stopper.
ComplexMatrix upb_projector(const tiles::Upb& u);

/// Uniform state on the subgrid [c-m, c+m] x [c-m, c+m]; m=0 gives |c>|c>.
Ket sub_stopper(int d, int m);

/// The four unnormalized vectors spanning the layer-m slice of the
/// entangled subspace: three sign combinations of the layer's missing
/// states plus the stopper-orthogonal completion.
std::vector<Ket> entangled_block(int d, int m);

DensityMatrix rho_d(int d, tiles::Variant variant);

SigmaFactor sigma(int d, int m);

DensityMatrix sigma_family(int d, const std::vector<double>& p);

/// 2(d-1) orthonormal vectors spanning the complement of the UPB span,
/// grouped in layer blocks, innermost first.
std::vector<Ket> entangled_basis(int d);

DensityMatrix rho3_unequal(const std::vector<double>& p);

}  // namespace upb::states
