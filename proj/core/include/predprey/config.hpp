#ifndef PREDPREY_CONFIG_HPP
#define PREDPREY_CONFIG_HPP

#include <string>

#include "predprey/grid.hpp"
#include "predprey/params.hpp"
#include "predprey/solver.hpp"

namespace predprey {

// Structured-text configuration with a flat [model] table:
//
//   [model]
//   r0 = 1.0
//   eta = 1.0
//   alpha = 1.0
//   gamma_tilde = 1.0
//   Gamma = 2.5
//   mu = 1.0
//   xi = 2.0
//   d1 = 0.01
//   d2 = 1.0
//   d3 = 0.1
//   epsilon = 1e-3        # optional; required for microscopic runs
//
// Optional [grid] (n, length, ny, length_y) and [solver] (dt_max,
// cfl_safety, t_end, newton_tol, newton_max_iters, output_stride,
// snapshot_stride) tables; defaults apply for anything omitted.
struct LoadedConfig {
    ModelParams model;
    SolverConfig solver;
    Grid grid;
    bool has_grid = false;  // [grid] table present
};

// Throws ConfigError with a field-precise message on missing keys,
// non-numeric values, unknown keys, or invariant violations.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& text, const std::string& origin = "<string>");

}  // namespace predprey

#endif
