#ifndef PREDPREY_GRID_HPP
#define PREDPREY_GRID_HPP

#include <vector>

namespace predprey {

// Uniform cell-centered grid on [0,L] (1D) or [0,Lx]x[0,Ly] (2D) with
// homogeneous Neumann boundary conditions realised by ghost-cell
// reflection.  Cell i is centered at (i + 1/2) h.
struct Grid {
    int dim = 1;
    int nx = 0, ny = 1;
    double lx = 1.0, ly = 1.0;
    double hx = 0.0, hy = 0.0;

    static Grid line(int n, double L);
    static Grid rect(int nx, int ny, double Lx, double Ly);

    int cells() const { return nx * ny; }
    double cell_volume() const { return dim == 1 ? hx : hx * hy; }
    int index(int i, int j = 0) const { return j * nx + i; }
    double x(int i) const { return (i + 0.5) * hx; }
    double y(int j) const { return (j + 0.5) * hy; }
};

using Field = std::vector<double>;

// Second-order central Laplacian with reflecting ghost cells.  Fluxes
// telescope, so the cell-sum of the output vanishes up to rounding.
void laplacian_neumann(const Grid& g, const Field& in, Field& out);

// Integral norms (cell midpoint rule) and plain cell sum, all accumulated
// in a fixed serial order for bitwise reproducibility.
double norm_l1(const Grid& g, const Field& f);
double norm_l2(const Grid& g, const Field& f);
double norm_linf(const Grid& g, const Field& f);
double cell_sum(const Grid& g, const Field& f);

}  // namespace predprey

#endif
