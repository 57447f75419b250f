#pragma once

namespace hcu {

// Uniform 1-D mesh. Cell j covers [xmin + j*dx, xmin + (j+1)*dx), j in [0, n).
struct Grid1D {
    double xmin = 0.0, xmax = 1.0;
    int n = 1;

    double dx() const { return (xmax - xmin) / n; }
    double center(int j) const { return xmin + (j + 0.5) * dx(); }
};

// Uniform 2-D mesh; index pair (j, k) with j along x and k along y.
struct Grid2D {
    double xmin = 0.0, xmax = 1.0;
    double ymin = 0.0, ymax = 1.0;
    int nx = 1, ny = 1;

    double dx() const { return (xmax - xmin) / nx; }
    double dy() const { return (ymax - ymin) / ny; }
    double xcenter(int j) const { return xmin + (j + 0.5) * dx(); }
    double ycenter(int k) const { return ymin + (k + 0.5) * dy(); }
};

}  // namespace hcu
