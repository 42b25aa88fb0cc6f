#include "predprey/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "predprey/errors.hpp"

namespace predprey {

Grid Grid::line(int n, double L) {
    if (n < 4) throw ConfigError("grid needs at least 4 cells, got " + std::to_string(n));
    if (!(L > 0.0)) throw ConfigError("domain length must be positive");
    Grid g;
    g.dim = 1;
    g.nx = n;
    g.ny = 1;
    g.lx = L;
    g.ly = 0.0;
    g.hx = L / n;
    g.hy = 0.0;
    return g;
}

Grid Grid::rect(int nx, int ny, double Lx, double Ly) {
    if (nx < 4 || ny < 4)
        throw ConfigError("grid needs at least 4 cells per direction, got " + std::to_string(nx) +
                          "x" + std::to_string(ny));
    if (!(Lx > 0.0) || !(Ly > 0.0)) throw ConfigError("domain lengths must be positive");
    Grid g;
    g.dim = 2;
    g.nx = nx;
    g.ny = ny;
    g.lx = Lx;
    g.ly = Ly;
    g.hx = Lx / nx;
    g.hy = Ly / ny;
    return g;
}

void laplacian_neumann(const Grid& g, const Field& in, Field& out) {
    if ((int)in.size() != g.cells())
        throw NumericalError("laplacian: field size " + std::to_string(in.size()) +
                             " does not match grid with " + std::to_string(g.cells()) + " cells");
    out.resize(in.size());
    const double ix2 = 1.0 / (g.hx * g.hx);
    if (g.dim == 1) {
        const int n = g.nx;
        // reflecting ghosts: u[-1] = u[0], u[n] = u[n-1]
        out[0] = (in[1] - in[0]) * ix2;
        for (int i = 1; i < n - 1; ++i) out[i] = (in[i - 1] - 2.0 * in[i] + in[i + 1]) * ix2;
        out[n - 1] = (in[n - 2] - in[n - 1]) * ix2;
        return;
    }
    const double iy2 = 1.0 / (g.hy * g.hy);
    const int nx = g.nx, ny = g.ny;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int c = j * nx + i;
            const double u = in[c];
            const double ul = i > 0 ? in[c - 1] : u;
            const double ur = i < nx - 1 ? in[c + 1] : u;
            const double ud = j > 0 ? in[c - nx] : u;
            const double uu = j < ny - 1 ? in[c + nx] : u;
            out[c] = (ul - 2.0 * u + ur) * ix2 + (ud - 2.0 * u + uu) * iy2;
        }
    }
}

double norm_l1(const Grid& g, const Field& f) {
    double s = 0.0;
    for (double v : f) s += std::abs(v);
    return s * g.cell_volume();
}

double norm_l2(const Grid& g, const Field& f) {
    double s = 0.0;
    for (double v : f) s += v * v;
    return std::sqrt(s * g.cell_volume());
}

double norm_linf(const Grid& g, const Field& f) {
    (void)g;
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

double cell_sum(const Grid& g, const Field& f) {
    (void)g;
    double s = 0.0;
    for (double v : f) s += v;
    return s;
}

}  // namespace predprey
