#include "upbtiles/json_io.hpp"

namespace upb::io {

using nlohmann::json;
using tiles::Provenance;
using tiles::TileId;

namespace {

json complex_pairs(const cplx* data, std::size_t n) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) out.push_back({data[i].real(), data[i].imag()});
    return out;
}

const char* tile_name(TileId id) {
    switch (id) {
        case TileId::Top: return "top";
        case TileId::Bottom: return "bottom";
        case TileId::Right: return "right";
        case TileId::Left: return "left";
    }
    return "?";
}

TileId tile_from_name(const std::string& s) {
    if (s == "top") return TileId::Top;
    if (s == "bottom") return TileId::Bottom;
    if (s == "right") return TileId::Right;
    if (s == "left") return TileId::Left;
    throw std::invalid_argument("unknown tile id: " + s);
}

const char* kind_name(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::Tile: return "tile";
        case Provenance::Kind::Stopper: return "stopper";
        case Provenance::Kind::Missing: return "missing";
        case Provenance::Kind::Central: return "central";
    }
    return "?";
}

Provenance::Kind kind_from_name(const std::string& s) {
    if (s == "tile") return Provenance::Kind::Tile;
    if (s == "stopper") return Provenance::Kind::Stopper;
    if (s == "missing") return Provenance::Kind::Missing;
    if (s == "central") return Provenance::Kind::Central;
    throw std::invalid_argument("unknown provenance kind: " + s);
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            data.push_back({m(i, j).real(), m(i, j).imag()});
    out["data"] = data;
    return out;
}

ComplexMatrix matrix_from_json(const json& j) {
    const std::size_t rows = j.at("rows"), cols = j.at("cols");
    const auto& data = j.at("data");
    if (data.size() != rows * cols)
        throw std::invalid_argument("matrix json: data length mismatch");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& p = data[i * cols + k];
            m(i, k) = cplx{p[0].get<double>(), p[1].get<double>()};
        }
    return m;
}

json ket_to_json(const Ket& v) {
    json out;
    out["dim"] = v.dim();
    json amp = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) amp.push_back({v[i].real(), v[i].imag()});
    out["amp"] = amp;
    return out;
}

Ket ket_from_json(const json& j) {
    const std::size_t dim = j.at("dim");
    const auto& amp = j.at("amp");
    if (amp.size() != dim) throw std::invalid_argument("ket json: amp length mismatch");
    Ket v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = cplx{amp[i][0].get<double>(), amp[i][1].get<double>()};
    return v;
}

json product_state_to_json(const tiles::ProductState& s) {
    return {{"label", s.label},
            {"provenance",
             {{"kind", kind_name(s.provenance.kind)},
              {"layer_k", s.provenance.layer_k},
              {"tile", tile_name(s.provenance.tile_id)},
              {"kprime", s.provenance.kprime}}},
            {"a", ket_to_json(s.a)},
            {"b", ket_to_json(s.b)}};
}

tiles::ProductState product_state_from_json(const json& j) {
    tiles::ProductState s;
    s.label = j.at("label");
    const auto& p = j.at("provenance");
    s.provenance = {kind_from_name(p.at("kind")), p.at("layer_k"),
                    tile_from_name(p.at("tile")), p.at("kprime")};
    s.a = ket_from_json(j.at("a"));
    s.b = ket_from_json(j.at("b"));
    return s;
}

json upb_to_json(const tiles::Upb& u) {
    json members = json::array();
    for (const auto& m : u.members) members.push_back(product_state_to_json(m));
    return {{"d", u.d},
            {"variant", tiles::to_string(u.variant)},
            {"members", members},
            {"stopper", product_state_to_json(u.stopper)}};
}

tiles::Upb upb_from_json(const json& j) {
    tiles::Upb u;
    u.d = j.at("d");
    u.variant = tiles::variant_from_string(j.at("variant"));
    for (const auto& m : j.at("members")) u.members.push_back(product_state_from_json(m));
    u.stopper = product_state_from_json(j.at("stopper"));
    return u;
}

json density_to_json(const states::DensityMatrix& rho) {
    return {{"label", rho.label},
            {"dA", rho.dA},
            {"dB", rho.dB},
            {"matrix", matrix_to_json(rho.matrix)}};
}

json certificate_to_json(const verify::Certificate& c, bool include_elapsed) {
    json out = {{"claim", c.claim},
                {"status", c.status},
                {"confidence", c.confidence},
                {"witnesses", c.witnesses},
                {"config", c.config}};
    if (include_elapsed) out["elapsed_ms"] = c.elapsed_ms;
    return out;
}

}  // namespace upb::io
