#include "hcu/cases.hpp"

#include <cmath>

#include "hcu/errors.hpp"

namespace hcu {
namespace {

const double pi = std::acos(-1.0);

BenchmarkCase shock_bubble() {
    BenchmarkCase c;
    c.name = "shock_bubble";
    c.dim = 1;
    c.xmin = -1.0;
    c.xmax = 1.0;
    c.t_final = 3.0;
    c.paper_grid = c.desk_grid = {200, 0};
    c.bc1.left.type = BcType::SolidWall;
    c.bc1.right.type = BcType::Free;
    c.ic1 = [](double x) -> Prim1 {
        if (std::abs(x) < 0.25) return {13.1538, 0.0, 1.0};
        if (x > 0.75) return {1.3333, -0.3535, 1.5};
        return {1.0, 0.0, 1.0};
    };
    return c;
}

BenchmarkCase shock_entropy() {
    BenchmarkCase c;
    c.name = "shock_entropy";
    c.dim = 1;
    c.xmin = -5.0;
    c.xmax = 5.0;
    c.t_final = 5.0;
    c.paper_grid = c.desk_grid = {800, 0};
    c.ic1 = [](double x) -> Prim1 {
        if (x < -4.5) return {1.51695, 0.523346, 1.805};
        return {1.0 + 0.1 * std::sin(20.0 * x), 0.0, 1.0};
    };
    return c;
}

BenchmarkCase stationary_contact() {
    BenchmarkCase c;
    c.name = "stationary_contact";
    c.dim = 1;
    c.xmin = -1.0;
    c.xmax = 1.0;
    c.t_final = 0.03;
    c.paper_grid = c.desk_grid = {200, 0};
    c.ic1 = [](double x) -> Prim1 {
        if (x < 0.8) return {1.0, -19.59745, 1000.0};
        return {1.0, -19.59745, 0.01};
    };
    return c;
}

BenchmarkCase blast() {
    BenchmarkCase c;
    c.name = "blast";
    c.dim = 1;
    c.xmin = 0.0;
    c.xmax = 1.0;
    c.t_final = 0.038;
    c.paper_grid = c.desk_grid = {400, 0};
    c.bc1 = BoundarySpec1::all_wall();
    c.ic1 = [](double x) -> Prim1 {
        if (x < 0.1) return {1.0, 0.0, 1000.0};
        if (x > 0.9) return {1.0, 0.0, 100.0};
        return {1.0, 0.0, 0.01};
    };
    return c;
}

BenchmarkCase riemann2d_cfg3() {
    BenchmarkCase c;
    c.name = "riemann2d_cfg3";
    c.dim = 2;
    c.xmin = c.ymin = 0.0;
    c.xmax = c.ymax = 1.2;
    c.t_final = 1.0;
    c.paper_grid = {1000, 1000};
    c.desk_grid = {300, 300};
    c.ic2 = [](double x, double y) -> Prim2 {
        if (x > 1.0) {
            if (y > 1.0) return {1.5, 0.0, 0.0, 1.5};
            return {0.5323, 0.0, 1.206, 0.3};
        }
        if (y > 1.0) return {0.5323, 1.206, 0.0, 0.3};
        return {0.138, 1.206, 1.206, 0.029};
    };
    return c;
}

BenchmarkCase explosion() {
    BenchmarkCase c;
    c.name = "explosion";
    c.dim = 2;
    c.xmin = c.ymin = 0.0;
    c.xmax = c.ymax = 1.5;
    c.t_final = 3.2;
    c.paper_grid = {400, 400};
    c.desk_grid = {200, 200};
    c.bc2.left.type = BcType::SolidWall;
    c.bc2.bottom.type = BcType::SolidWall;
    c.ic2 = [](double x, double y) -> Prim2 {
        if (x * x + y * y < 0.16) return {1.0, 0.0, 0.0, 1.0};
        return {0.125, 0.0, 0.0, 0.1};
    };
    return c;
}

BenchmarkCase implosion() {
    BenchmarkCase c;
    c.name = "implosion";
    c.dim = 2;
    c.xmin = c.ymin = 0.0;
    c.xmax = c.ymax = 0.3;
    c.t_final = 2.5;
    c.paper_grid = {600, 600};
    c.desk_grid = {400, 400};
    c.bc2 = BoundarySpec2::all_wall();
    c.ic2 = [](double x, double y) -> Prim2 {
        if (std::abs(x) + std::abs(y) < 0.15) return {0.125, 0.0, 0.0, 0.14};
        return {1.0, 0.0, 0.0, 1.0};
    };
    return c;
}

BenchmarkCase kelvin_helmholtz() {
    BenchmarkCase c;
    c.name = "kelvin_helmholtz";
    c.dim = 2;
    c.xmin = c.ymin = -0.5;
    c.xmax = c.ymax = 0.5;
    c.t_final = 4.0;
    c.paper_grid = {1024, 1024};
    c.desk_grid = {256, 256};
    c.bc2 = BoundarySpec2::all_periodic();
    c.ic2 = [](double x, double y) -> Prim2 {
        const double L = 0.00625;
        double rho, u;
        if (y < -0.25) {
            rho = 1.0;
            u = -0.5 + 0.5 * std::exp((y + 0.25) / L);
        } else if (y < 0.0) {
            rho = 2.0;
            u = 0.5 - 0.5 * std::exp((-y - 0.25) / L);
        } else if (y < 0.25) {
            rho = 2.0;
            u = 0.5 - 0.5 * std::exp((y - 0.25) / L);
        } else {
            rho = 1.0;
            u = -0.5 + 0.5 * std::exp((0.25 - y) / L);
        }
        return {rho, u, 0.01 * std::sin(4.0 * pi * x), 1.5};
    };
    return c;
}

BenchmarkCase rayleigh_taylor() {
    BenchmarkCase c;
    c.name = "rayleigh_taylor";
    c.dim = 2;
    c.gamma = 5.0 / 3.0;
    c.xmin = 0.0;
    c.xmax = 0.25;
    c.ymin = 0.0;
    c.ymax = 1.0;
    c.t_final = 2.95;
    c.paper_grid = {256, 1024};
    c.desk_grid = {128, 512};
    c.source = SourceSpec::GravityPlusY;
    c.bc2.left.type = c.bc2.right.type = BcType::SolidWall;
    c.bc2.bottom.type = BcType::Dirichlet;
    c.bc2.bottom.dirichlet = {2.0, 0.0, 0.0, 1.0};
    c.bc2.top.type = BcType::Dirichlet;
    c.bc2.top.dirichlet = {1.0, 0.0, 0.0, 2.5};
    const double gamma = c.gamma;
    c.ic2 = [gamma](double x, double y) -> Prim2 {
        const double rho = y < 0.5 ? 2.0 : 1.0;
        const double p = y < 0.5 ? 2.0 * y + 1.0 : y + 1.5;
        const double cs = std::sqrt(gamma * p / rho);
        return {rho, 0.0, -0.025 * cs * std::cos(8.0 * pi * x), p};
    };
    return c;
}

// Smooth advected profile with a known exact solution; drives the
// convergence and conservation studies.
BenchmarkCase density_wave() {
    BenchmarkCase c;
    c.name = "density_wave";
    c.dim = 1;
    c.xmin = -1.0;
    c.xmax = 1.0;
    c.t_final = 0.1;
    c.paper_grid = c.desk_grid = {400, 0};
    c.bc1 = BoundarySpec1::all_periodic();
    c.ic1 = [](double x) -> Prim1 { return {1.0 + 0.5 * std::sin(pi * x), 1.0, 1.0}; };
    return c;
}

}  // namespace

BenchmarkCase make_case(const std::string& name) {
    if (name == "shock_bubble") return shock_bubble();
    if (name == "shock_entropy") return shock_entropy();
    if (name == "stationary_contact") return stationary_contact();
    if (name == "blast") return blast();
    if (name == "riemann2d_cfg3") return riemann2d_cfg3();
    if (name == "explosion") return explosion();
    if (name == "implosion") return implosion();
    if (name == "kelvin_helmholtz") return kelvin_helmholtz();
    if (name == "rayleigh_taylor") return rayleigh_taylor();
    if (name == "density_wave") return density_wave();
    throw ConfigError("unknown case: " + name);
}

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names = {
        "shock_bubble",   "shock_entropy", "stationary_contact", "blast",
        "riemann2d_cfg3", "explosion",     "implosion",          "kelvin_helmholtz",
        "rayleigh_taylor", "density_wave"};
    return names;
}

Grid1D case_grid(const BenchmarkCase& c, int nx) {
    if (c.dim != 1) throw ConfigError(c.name + " is not a 1-D case");
    if (nx < 2) throw ConfigError("nx must be at least 2");
    return {c.xmin, c.xmax, nx};
}

Grid2D case_grid(const BenchmarkCase& c, int nx, int ny) {
    if (c.dim != 2) throw ConfigError(c.name + " is not a 2-D case");
    if (nx < 2 || ny < 2) throw ConfigError("nx and ny must be at least 2");
    return {c.xmin, c.xmax, c.ymin, c.ymax, nx, ny};
}

Field1D<3> init_field(const BenchmarkCase& c, const Grid1D& g) {
    if (!c.ic1) throw ConfigError(c.name + " has no 1-D initial data");
    Field1D<3> f(g.n);
    for (int j = 0; j < g.n; ++j) f.at(j) = prim_to_cons(c.ic1(g.center(j)), c.gamma);
    return f;
}

Field2D<4> init_field(const BenchmarkCase& c, const Grid2D& g) {
    if (!c.ic2) throw ConfigError(c.name + " has no 2-D initial data");
    Field2D<4> f(g.nx, g.ny);
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j)
            f.at(j, k) = prim_to_cons(c.ic2(g.xcenter(j), g.ycenter(k)), c.gamma);
    return f;
}

}  // namespace hcu
