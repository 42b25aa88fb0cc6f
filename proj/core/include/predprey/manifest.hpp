#ifndef PREDPREY_MANIFEST_HPP
#define PREDPREY_MANIFEST_HPP

#include <cstdint>
#include <string>

#include "predprey/grid.hpp"
#include "predprey/params.hpp"
#include "predprey/solver.hpp"

namespace predprey {

// Ties every output directory to the exact resolved configuration that
// produced it: dimensional parameters, the derived nondimensional view when
// defined, grid, solver settings, tool version and seed.
struct RunManifest {
    std::string tool = "predprey";
    std::string version;
    std::string command;
    std::uint64_t seed = 0;
    int threads = 1;
    ModelParams model;
    bool has_nondim = false;
    NondimParams nondim{};
    NondimMap map{};
    bool has_grid = false;
    Grid grid;
    SolverConfig solver;
};

std::string to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

void write_manifest(const std::string& dir, const RunManifest& m);

}  // namespace predprey

#endif
