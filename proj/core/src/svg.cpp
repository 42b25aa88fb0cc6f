#include "predprey/svg.hpp"

#include <set>
#include <sstream>

namespace predprey {

namespace {

const char* fill_of(const ScanCell& c) {
    if (!c.error.empty()) return "#000000";
    switch (c.which) {
        case RegionCase::NoCoexistence: return "#d9d9d9";
        case RegionCase::NoTuringBoth: return "#4575b4";
        case RegionCase::LinearOnly: return "#fdae61";
        case RegionCase::BothWithInclusion: return "#d73027";
    }
    return "#000000";
}

const char* label_of(const ScanCell& c) {
    if (!c.error.empty()) return "error";
    return to_string(c.which);
}

}  // namespace

std::string svg_region_map(const std::vector<ScanCell>& cells, const ScanSpec& spec) {
    const int cell_px = 8;
    const int legend_w = 170;
    const int w = spec.n2 * cell_px + legend_w;
    const int h = spec.n1 * cell_px;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << std::max(h, 80) << "\" viewBox=\"0 0 " << w << " " << std::max(h, 80) << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << std::max(h, 80)
        << "\" fill=\"#ffffff\"/>\n";

    // cells in row-major order, p1 down, p2 across
    std::set<std::string> present;
    for (int i = 0; i < spec.n1; ++i) {
        for (int j = 0; j < spec.n2; ++j) {
            const ScanCell& c = cells[std::size_t(i) * spec.n2 + j];
            present.insert(label_of(c));
            out << "<rect x=\"" << j * cell_px << "\" y=\"" << i * cell_px << "\" width=\""
                << cell_px << "\" height=\"" << cell_px << "\" fill=\"" << fill_of(c) << "\"/>\n";
        }
    }

    // legend: fixed order, entries for the labels present in the map
    const struct {
        const char* label;
        const char* fill;
    } legend[] = {
        {"NoCoexistence", "#d9d9d9"},
        {"NoTuringBoth", "#4575b4"},
        {"LinearOnly", "#fdae61"},
        {"BothWithInclusion", "#d73027"},
        {"error", "#000000"},
    };
    int row = 0;
    for (const auto& e : legend) {
        if (!present.count(e.label)) continue;
        const int x = spec.n2 * cell_px + 10;
        const int y = 10 + row * 18;
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"12\" height=\"12\" fill=\""
            << e.fill << "\"/>\n";
        out << "<text x=\"" << x + 18 << "\" y=\"" << y + 11
            << "\" font-family=\"monospace\" font-size=\"12\">" << e.label << "</text>\n";
        ++row;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace predprey
