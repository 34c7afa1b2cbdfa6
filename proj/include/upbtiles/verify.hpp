#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "upbtiles/states.hpp"

namespace upb::verify {

struct Certificate {
    std::string claim;
    std::string status;      // pass | fail | inconclusive
    std::string confidence;  // proof | evidence
    nlohmann::json witnesses = nlohmann::json::object();
    nlohmann::json config = nlohmann::json::object();
    double elapsed_ms = 0.0;

    bool passed() const { return status == "pass"; }
};

struct SeesawConfig {
    int restarts = 200;
    int max_iters = 500;
    std::uint64_t seed = 0;
    double tol_converge = 1e-12;
    double tol_found = 1e-8;
    double tol_absent = 1e-6;
};

Certificate check_orthogonality(const std::vector<tiles::ProductState>& states,
                                double tol = 1e-12, const std::string& label = "set");

Certificate check_completeness(const std::vector<tiles::ProductState>& states, int d,
                               const std::string& label = "set");

/// Exhaustive bipartition search. A product state orthogonal to every member
/// exists iff some split (S_A, S_B) of the set leaves both local spans
/// rank-deficient; the search is depth-first with incremental rank tracking
/// and prunes any branch where either span already fills its side.
Certificate check_unextendible_exhaustive(const std::vector<tiles::ProductState>& states,
                                          int d, const std::string& label,
                                          std::uint64_t budget = 1000000000ULL);
Certificate check_unextendible_exhaustive(const tiles::Upb& u,
                                          std::uint64_t budget = 1000000000ULL);

/// Seesaw maximization of <a(x)b|P_S|a(x)b>. Witness field "result" is
/// "found", "absent", or "inconclusive".
Certificate search_product_in_subspace(const Subspace& s, std::size_t dA, std::size_t dB,
                                       const SeesawConfig& cfg,
                                       const std::string& label = "subspace");

Certificate check_ppt(const states::DensityMatrix& rho, double tol = 1e-9);

Certificate check_rank(const states::DensityMatrix& rho, std::size_t expected);

Certificate check_decomposition(const states::DensityMatrix& rho,
                                const std::vector<states::DensityMatrix>& factors,
                                double coeff);
Certificate check_decomposition(int d, tiles::Variant variant);

Certificate check_extreme_rank4(const states::SigmaFactor& sf);

/// Edge criterion: seesaw minimization of
/// g(a,b) = <a(x)b|Q_R|a(x)b> + <a(x)conj(b)|Q_T|a(x)conj(b)>.
/// Throws std::invalid_argument if rho is not PPT.
Certificate check_edge(const states::DensityMatrix& rho, const SeesawConfig& cfg);

/// Cardinality arithmetic: rules out d=5 UPBs of cardinality 18..20.
Certificate check_cardinality_constraint(int d);

/// Empirical scan over random mixtures of the entangled-basis projectors;
/// records min PT eigenvalue per sample, asserts nothing.
nlohmann::json mixture_scan(int d, int samples, std::uint64_t seed);

}  // namespace upb::verify
