#ifndef PREDPREY_SVG_HPP
#define PREDPREY_SVG_HPP

#include <string>
#include <vector>

#include "predprey/turing.hpp"

namespace predprey {

// Deterministic SVG heat-map of scan case labels: one rect per cell in a
// fixed row-major order, legend entries for the cases present in the map.
// Identical inputs produce byte-identical output.
std::string svg_region_map(const std::vector<ScanCell>& cells, const ScanSpec& spec);

}  // namespace predprey

#endif
