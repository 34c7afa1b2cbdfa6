#pragma once

#include "upbtiles/verify.hpp"

namespace upb::discrimination {

enum class SetKind { UCPB, CompletableSet, UPB, COPB };

std::string to_string(SetKind k);

struct StateSet {
    std::vector<tiles::ProductState> states;
    int d = 0;
    SetKind kind = SetKind::UPB;
    std::string label;
};

/// Throws std::invalid_argument if the states are not pairwise orthogonal.
StateSet make_state_set(std::vector<tiles::ProductState> states, int d, SetKind kind,
                        std::string label);

struct OpmAnalysis {
    linalg::Side party = linalg::Side::A;
    std::size_t nullspace_dim = 0;
    std::vector<ComplexMatrix> basis;  // orthonormal Hermitian matrices
    bool trivial = false;
};

/// One state per non-central tile (the k'=k row) plus the stopper.
StateSet ucpb_set(int d, tiles::Variant variant);

/// UPB members minus the outermost Bottom/Left k'-maximal states; no stopper.
StateSet completable_set(int d, tiles::Variant variant);

/// The published d=5 instances.
StateSet nine_state_set();
StateSet fourteen_state_set();

/// Solution space of the orthogonality-preserving measurement constraints:
/// for every pair with <b_i|b_j> != 0 (party A; roles swapped for B) the
/// Hermitian element E must satisfy <a_i|E|a_j> = 0.
OpmAnalysis opm_nullspace(const StateSet& set, linalg::Side party);

verify::Certificate check_strong_indistinguishability(const StateSet& set);

/// Extends the set to a complete orthogonal product basis, drawing first from
/// the COPB pool and then from a seesaw search in the residual subspace.
verify::Certificate check_completability(const StateSet& set, tiles::Variant variant);

}  // namespace upb::discrimination
