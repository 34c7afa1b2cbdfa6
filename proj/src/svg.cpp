#include "upbtiles/svg.hpp"

#include <sstream>

namespace upb::svg {

namespace {

constexpr int kCell = 64;

// palette indexed by layer (cycled for very large d)
const char* kColors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                         "#76b7b2", "#edc948", "#b07aa1"};

const char* layer_color(int k) { return kColors[(k - 1) % 7]; }

}  // namespace

std::string tile_diagram(const tiles::TileLayout& lay) {
    const int d = lay.d;
    const int size = d * kCell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2
        << "\" height=\"" << size + 2 + 24 << "\" viewBox=\"-1 -1 " << size + 2 << " "
        << size + 2 + 24 << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    for (const auto& t : lay.tiles) {
        int row_lo, col_lo, w_cells, h_cells;
        if (t.fixed_side == linalg::Side::A) {
            row_lo = t.fixed_level;
            col_lo = t.support_lo;
            w_cells = t.support_len();
            h_cells = 1;
        } else {
            row_lo = t.support_lo;
            col_lo = t.fixed_level;
            w_cells = 1;
            h_cells = t.support_len();
        }
        out << "<rect x=\"" << col_lo * kCell << "\" y=\"" << row_lo * kCell
            << "\" width=\"" << w_cells * kCell << "\" height=\"" << h_cells * kCell
            << "\" fill=\"" << layer_color(t.layer_k)
            << "\" fill-opacity=\"0.55\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }

    // central cell
    out << "<rect x=\"" << lay.center * kCell << "\" y=\"" << lay.center * kCell
        << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"#bab0ac\" stroke=\"black\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << lay.center * kCell + kCell / 2 << "\" y=\""
        << lay.center * kCell + kCell / 2 + 5
        << "\" text-anchor=\"middle\" font-size=\"16\">C</text>\n";

    // light grid lines
    for (int i = 1; i < d; ++i) {
        out << "<line x1=\"" << i * kCell << "\" y1=\"0\" x2=\"" << i * kCell
            << "\" y2=\"" << size << "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
        out << "<line x1=\"0\" y1=\"" << i * kCell << "\" x2=\"" << size << "\" y2=\""
            << i * kCell << "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
    }

    const int members = (d - 1) * (d - 1);
    out << "<text x=\"2\" y=\"" << size + 18 << "\" font-size=\"14\">d=" << d << ", "
        << lay.tiles.size() << " tiles, " << members << "+1 member states</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace upb::svg
