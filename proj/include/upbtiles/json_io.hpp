#pragma once

#include <json.hpp>

#include "upbtiles/states.hpp"
#include "upbtiles/verify.hpp"

namespace upb::io {

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json ket_to_json(const Ket& v);
Ket ket_from_json(const nlohmann::json& j);

nlohmann::json product_state_to_json(const tiles::ProductState& s);
tiles::ProductState product_state_from_json(const nlohmann::json& j);

nlohmann::json upb_to_json(const tiles::Upb& u);
tiles::Upb upb_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const states::DensityMatrix& rho);

/// elapsed_ms is omitted by default so reports are byte-deterministic.
nlohmann::json certificate_to_json(const verify::Certificate& c,
                                   bool include_elapsed = false);

}  // namespace upb::io
