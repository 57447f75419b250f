#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hcu/boundary.hpp"
#include "hcu/euler.hpp"
#include "hcu/field.hpp"
#include "hcu/grid.hpp"
#include "hcu/source.hpp"

namespace hcu {

struct GridSize {
    int nx = 0;
    int ny = 0;  // 0 in 1-D
};

// One benchmark problem: domain, pointwise primitive initial data, boundary
// conditions, gas constant, final time, and the reference resolutions. The
// paper_grid is the published resolution; desk_grid is the minutes-scale
// default this project runs at.
struct BenchmarkCase {
    std::string name;
    int dim = 1;
    double xmin = 0.0, xmax = 1.0;
    double ymin = 0.0, ymax = 1.0;  // ignored in 1-D
    std::function<Prim1(double)> ic1;
    std::function<Prim2(double, double)> ic2;
    BoundarySpec1 bc1;
    BoundarySpec2 bc2;
    double gamma = 1.4;
    double t_final = 1.0;
    GridSize paper_grid, desk_grid;
    SourceSpec source = SourceSpec::None;
};

// Benchmark registry. Names: shock_bubble, shock_entropy, stationary_contact,
// blast, riemann2d_cfg3, explosion, implosion, kelvin_helmholtz,
// rayleigh_taylor, plus the smooth density_wave used by convergence studies.
BenchmarkCase make_case(const std::string& name);
const std::vector<std::string>& case_names();

Grid1D case_grid(const BenchmarkCase& c, int nx);
Grid2D case_grid(const BenchmarkCase& c, int nx, int ny);

// Midpoint-rule initialization: cells cut by a discontinuity take the side
// their center lies on.
Field1D<3> init_field(const BenchmarkCase& c, const Grid1D& g);
Field2D<4> init_field(const BenchmarkCase& c, const Grid2D& g);

}  // namespace hcu
