#include "hcu/study.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hcu/errors.hpp"

namespace hcu {

SchemeConfig study_config(const BenchmarkCase& c, const StudyParams& p) {
    SchemeConfig cfg = SchemeConfig::make(p.scheme, c.gamma);
    cfg.cfl = p.cfl;
    cfg.epsilon = p.epsilon;
    if (p.reconstruction) cfg.reconstruction = *p.reconstruction;
    cfg.validate();
    return cfg;
}

double study_t_final(const BenchmarkCase& c, const StudyParams& p) {
    const double t = p.t_final >= 0.0 ? p.t_final : c.t_final;
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("invalid t_final");
    return t;
}

Grid1D study_grid1(const BenchmarkCase& c, const StudyParams& p) {
    return case_grid(c, p.nx > 0 ? p.nx : c.desk_grid.nx);
}

Grid2D study_grid2(const BenchmarkCase& c, const StudyParams& p) {
    int nx = p.nx > 0 ? p.nx : c.desk_grid.nx;
    int ny = p.ny;
    if (ny <= 0) {
        if (p.nx > 0) {
            // keep the domain's aspect ratio when only nx is given
            const double aspect = (c.ymax - c.ymin) / (c.xmax - c.xmin);
            ny = std::max(2, static_cast<int>(std::lround(nx * aspect)));
        } else {
            ny = c.desk_grid.ny;
        }
    }
    return case_grid(c, nx, ny);
}

RunResult1 run_case_1d(const BenchmarkCase& c, const StudyParams& p,
                       const RunHooks<Field1D<3>>& hooks) {
    if (c.dim != 1) throw ConfigError(c.name + " is not a 1-D case");
    const Grid1D g = study_grid1(c, p);
    Solver1D<EulerPhys1> solver(g, EulerPhys1{c.gamma}, study_config(c, p), c.bc1, p.options);
    solver.field() = init_field(c, g);
    RunResult1 r{g, Field1D<3>{}, run_to_time(solver, study_t_final(c, p), hooks)};
    r.field = solver.field();
    return r;
}

RunResult2 run_case_2d(const BenchmarkCase& c, const StudyParams& p,
                       const RunHooks<Field2D<4>>& hooks) {
    if (c.dim != 2) throw ConfigError(c.name + " is not a 2-D case");
    const Grid2D g = study_grid2(c, p);
    Solver2D solver(g, study_config(c, p), c.bc2, c.source, p.options);
    solver.field() = init_field(c, g);
    RunResult2 r{g, Field2D<4>{}, run_to_time(solver, study_t_final(c, p), hooks)};
    r.field = solver.field();
    return r;
}

namespace {

ScalarField1 density1(const RunResult1& r) { return component_field(r.grid, r.field, 0); }
ScalarField2 density2(const RunResult2& r) { return component_field(r.grid, r.field, 0); }

}  // namespace

std::vector<CompareRow> compare_schemes(const BenchmarkCase& c,
                                        const std::vector<Scheme>& schemes,
                                        const std::vector<GridSize>& grids,
                                        const StudyParams& base) {
    if (schemes.empty() || grids.empty())
        throw ConfigError("compare needs at least one scheme and one grid");
    GridSize finest = grids.front();
    for (const GridSize& g : grids) {
        if (g.nx > finest.nx) finest = g;
    }

    StudyParams ref_params = base;
    ref_params.scheme = Scheme::OldCU;
    ref_params.reconstruction.reset();
    ref_params.nx = finest.nx;
    ref_params.ny = finest.ny;

    std::vector<CompareRow> rows;
    if (c.dim == 1) {
        const ScalarField1 ref = density1(run_case_1d(c, ref_params));
        for (Scheme s : schemes) {
            for (const GridSize& g : grids) {
                StudyParams p = base;
                p.scheme = s;
                p.reconstruction.reset();
                p.nx = g.nx;
                const RunResult1 r = run_case_1d(c, p);
                const ScalarField1 rho = density1(r);
                rows.push_back({s, {g.nx, 0}, l1_error(rho, restrict_average(ref, r.grid)),
                                r.stats.wall_seconds * 1e3, r.stats.steps});
            }
        }
    } else {
        const ScalarField2 ref = density2(run_case_2d(c, ref_params));
        for (Scheme s : schemes) {
            for (const GridSize& g : grids) {
                StudyParams p = base;
                p.scheme = s;
                p.reconstruction.reset();
                p.nx = g.nx;
                p.ny = g.ny;
                const RunResult2 r = run_case_2d(c, p);
                const ScalarField2 rho = density2(r);
                rows.push_back({s, {r.grid.nx, r.grid.ny},
                                l1_error(rho, restrict_average(ref, r.grid)),
                                r.stats.wall_seconds * 1e3, r.stats.steps});
            }
        }
    }
    return rows;
}

std::vector<ConvergenceRow> convergence_study(const BenchmarkCase& c, Scheme scheme,
                                              const std::vector<int>& grids,
                                              const StudyParams& base) {
    if (c.dim != 1) throw ConfigError("convergence study expects a 1-D case");
    if (grids.size() < 3) throw ConfigError("convergence study needs at least 3 grid levels");
    for (size_t i = 1; i < grids.size(); ++i) {
        if (grids[i] <= grids[i - 1] || grids[i] % grids[i - 1] != 0)
            throw ConfigError("convergence grids must be increasing and nested");
    }

    std::vector<ScalarField1> rho;
    std::vector<Grid1D> mesh;
    for (int n : grids) {
        StudyParams p = base;
        p.scheme = scheme;
        p.nx = n;
        const RunResult1 r = run_case_1d(c, p);
        rho.push_back(density1(r));
        mesh.push_back(r.grid);
    }

    std::vector<ConvergenceRow> rows;
    for (size_t i = 0; i + 1 < grids.size(); ++i) {
        const double err = l1_error(rho[i], restrict_average(rho[i + 1], mesh[i]));
        rows.push_back({grids[i], err, std::numeric_limits<double>::quiet_NaN()});
    }
    for (size_t i = 1; i < rows.size(); ++i) {
        const double h_ratio = static_cast<double>(grids[i]) / grids[i - 1];
        rows[i].order = std::log(rows[i - 1].error / rows[i].error) / std::log(h_ratio);
    }
    return rows;
}

CesaroResult cesaro_study(const BenchmarkCase& c, Scheme scheme, int n_min, int n_max,
                          const StudyParams& base) {
    if (c.dim != 2) throw ConfigError("cesaro study expects a 2-D case");
    if (n_min < 5 || n_max > 10 || n_min >= n_max)
        throw ConfigError("cesaro range must satisfy 5 <= n_min < n_max <= 10");

    CesaroResult out;
    const int fine = 1 << n_max;
    const Grid2D fine_grid = case_grid(c, fine, fine);
    for (int n = n_min; n <= n_max; ++n) {
        StudyParams p = base;
        p.scheme = scheme;
        p.nx = p.ny = 1 << n;
        const RunResult2 r = run_case_2d(c, p);
        const ScalarField2 rho = density2(r);
        out.levels.push_back(n);
        out.run_totals.push_back(total(rho));
        out.projected.push_back(project_refine(rho, fine_grid));
    }
    out.average = cesaro_average(out.projected);
    return out;
}

}  // namespace hcu
