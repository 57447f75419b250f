#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcu/cases.hpp"
#include "hcu/config.hpp"
#include "hcu/postprocess.hpp"
#include "hcu/stepper.hpp"

namespace hcu {

// Per-run knobs shared by the CLI and the studies. Zero/negative grid or
// time fields fall back to the case defaults.
struct StudyParams {
    Scheme scheme = Scheme::NewLcdCU;
    int nx = 0, ny = 0;
    double t_final = -1.0;
    double cfl = 0.4;
    double epsilon = 1e-10;
    std::optional<Reconstruction> reconstruction;  // default follows the scheme
    RunOptions options;
};

SchemeConfig study_config(const BenchmarkCase& c, const StudyParams& p);
double study_t_final(const BenchmarkCase& c, const StudyParams& p);
Grid1D study_grid1(const BenchmarkCase& c, const StudyParams& p);
Grid2D study_grid2(const BenchmarkCase& c, const StudyParams& p);

struct RunResult1 {
    Grid1D grid;
    Field1D<3> field;
    RunStats stats;
};

struct RunResult2 {
    Grid2D grid;
    Field2D<4> field;
    RunStats stats;
};

RunResult1 run_case_1d(const BenchmarkCase& c, const StudyParams& p,
                       const RunHooks<Field1D<3>>& hooks = {});
RunResult2 run_case_2d(const BenchmarkCase& c, const StudyParams& p,
                       const RunHooks<Field2D<4>>& hooks = {});

// Old-vs-new comparison: every (scheme, grid) run is measured against the
// classical scheme on the finest requested grid, L1 on density, with the
// reference block-averaged down to the run's grid. Timing covers the time
// loop only.
struct CompareRow {
    Scheme scheme = Scheme::OldCU;
    GridSize grid;
    double l1_density = 0.0;
    double wall_ms = 0.0;
    long steps = 0;
};
std::vector<CompareRow> compare_schemes(const BenchmarkCase& c,
                                        const std::vector<Scheme>& schemes,
                                        const std::vector<GridSize>& grids,
                                        const StudyParams& base);

// Self-convergence on a refinement ladder: the error on each grid is the L1
// density distance to the next finer run restricted onto it; observed order
// from successive error ratios. Needs at least three grids.
struct ConvergenceRow {
    int nx = 0;
    double error = 0.0;
    double order = 0.0;  // NaN on the first row
};
std::vector<ConvergenceRow> convergence_study(const BenchmarkCase& c, Scheme scheme,
                                              const std::vector<int>& grids,
                                              const StudyParams& base);

// Cesaro ladder: run the case on 2^n x 2^n for n in [n_min, n_max], project
// every density onto the finest grid, and average in ladder order.
struct CesaroResult {
    std::vector<int> levels;
    std::vector<double> run_totals;        // density totals before projection
    std::vector<ScalarField2> projected;   // on the finest grid, ladder order
    ScalarField2 average;
};
CesaroResult cesaro_study(const BenchmarkCase& c, Scheme scheme, int n_min, int n_max,
                          const StudyParams& base);

}  // namespace hcu
