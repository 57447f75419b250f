#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hcu/boundary.hpp"
#include "hcu/config.hpp"
#include "hcu/cu_flux.hpp"
#include "hcu/field.hpp"
#include "hcu/grid.hpp"
#include "hcu/lcd_flux.hpp"
#include "hcu/parallel.hpp"
#include "hcu/physics.hpp"
#include "hcu/source.hpp"

namespace hcu {

// One Shu-Osher SSP-RK3 step of u' = rhs(u) for any affine-combinable state.
//   u1 = u + dt L(u);  u2 = 3/4 u + 1/4 (u1 + dt L(u1));
//   u_next = 1/3 u + 2/3 (u2 + dt L(u2))
template <class State, class Rhs>
inline State ssp_rk3_step(const State& u, double dt, Rhs&& rhs) {
    const State u1 = u + dt * rhs(u);
    const State u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1));
    return (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2));
}

struct StepInfo {
    long step = 0;
    double t = 0.0, dt = 0.0;
    double min_rho = 0.0, min_p = 0.0;
};

struct RunStats {
    long steps = 0;
    long fallback_faces = 0;     // interfaces degraded to first order
    long first_order_steps = 0;  // whole steps redone first-order
    double wall_seconds = 0.0;
    double min_rho = std::numeric_limits<double>::infinity();
    double min_p = std::numeric_limits<double>::infinity();
};

struct RunOptions {
    int workers = 1;
    bool first_order = false;  // zero-slope reconstruction, for sanity studies
};

template <class FieldT>
struct RunHooks {
    std::function<void(const StepInfo&)> on_step;
    std::vector<double> snapshot_times;  // strictly increasing
    std::function<void(double, const FieldT&)> on_snapshot;
};

namespace detail {

// Shared interface-flux dispatch for a row of cells. `cells` points at the
// first ghost cell (index -ghost_width); cflux[c + 1] must hold the analytic
// flux of cell c for c in [-1, n]. Writes n + 1 interface fluxes and returns
// the failing interface index, or -1.
//
// A second-order face can leave the admissible set next to a strong shock
// running into near-vacuum pressure even though every cell average is fine.
// Such an interface falls back to its cell averages (first-order faces) and
// is counted in `fallbacks`; only inadmissible averages fail the sweep.
template <PhysicsModel P, int N = P::dim>
inline int sweep_interfaces(const P& phys, const Vec<N>* cells, const Vec<N>* cflux, int n,
                            double dx, const SchemeConfig& cfg, bool first_order,
                            Vec<N>* iflux, long& fallbacks) {
    if (cfg.scheme == Scheme::OldCU) {
        for (int i = 0; i <= n; ++i) {
            if (cu_interface_flux(phys, cells + i, dx, cfg.epsilon, cfg.reconstruction,
                                  first_order, iflux[i]))
                continue;
            if (first_order ||
                !cu_interface_flux(phys, cells + i, dx, cfg.epsilon, cfg.reconstruction,
                                   true, iflux[i]))
                return i;
            ++fallbacks;
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            if (lcd_interface_flux(phys, cells + i, cflux[i], cflux[i + 1], dx, cfg.epsilon,
                                   cfg.reconstruction, first_order, iflux[i]))
                continue;
            if (first_order ||
                !lcd_interface_flux(phys, cells + i, cflux[i], cflux[i + 1], dx, cfg.epsilon,
                                    cfg.reconstruction, true, iflux[i]))
                return i;
            ++fallbacks;
        }
    }
    return -1;
}

}  // namespace detail

// 1-D semi-discrete solver. Owns the state field and the stage scratch;
// physics is a template parameter so the linear-system harness can reuse the
// exact production kernels.
template <PhysicsModel P>
class Solver1D {
public:
    static constexpr int N = P::dim;
    using FieldT = Field1D<N>;

    Solver1D(const Grid1D& grid, const P& phys, const SchemeConfig& cfg,
             const BoundarySpec1& bc, const RunOptions& opt = {})
        : grid_(grid), phys_(phys), cfg_(cfg), bc_(bc), opt_(opt), u_(grid.n), stage_(grid.n),
          l_(grid.n), saved_(grid.n), cflux_(grid.n + 2), iflux_(grid.n + 1) {
        cfg_.validate();
        bc_.validate();
        if (grid.n < 2) throw ConfigError("1-D grid needs at least 2 cells");
    }

    FieldT& field() { return u_; }
    const FieldT& field() const { return u_; }
    const Grid1D& grid() const { return grid_; }
    const SchemeConfig& config() const { return cfg_; }
    double time() const { return t_; }
    void set_time(double t) { t_ = t; }
    long steps_taken() const { return steps_; }
    long fallback_faces() const { return fallback_faces_; }
    long first_order_steps() const { return first_order_steps_; }

    // Tendency of `u` into `out` (interior cells). Fills u's ghosts first.
    void rhs(FieldT& u, FieldT& out) { rhs(u, out, opt_.first_order); }

    void rhs(FieldT& u, FieldT& out, bool first_order) {
        fill_ghost(u, bc_, cfg_.gamma);
        const int n = grid_.n;
        const double dx = grid_.dx();
        for (int c = -1; c <= n; ++c) cflux_[c + 1] = phys_.flux(u.at(c));
        const int bad = detail::sweep_interfaces(phys_, &u.at(-ghost_width), cflux_.data(), n,
                                                 dx, cfg_, first_order, iflux_.data(),
                                                 fallback_faces_);
        if (bad >= 0)
            throw SolverError("inadmissible reconstructed state at interface " +
                              std::to_string(bad) + " (cells " + std::to_string(bad - 1) +
                              ", " + std::to_string(bad) + ")");
        const double inv_dx = 1.0 / dx;
        for (int j = 0; j < n; ++j) out.at(j) = inv_dx * (iflux_[j] - iflux_[j + 1]);
    }

    // CFL step from one-sided speeds of the pre-step cell averages; the scan
    // covers every cell adjacent to an interior interface, ghosts included.
    double max_stable_dt() {
        fill_ghost(u_, bc_, cfg_.gamma);
        double amax = 0.0;
        Vec<N> lam;
        for (int j = -1; j <= grid_.n; ++j) {
            if (!phys_.eigenvalues(u_.at(j), lam))
                throw SolverError("inadmissible state in time-step scan at cell " +
                                  std::to_string(j));
            amax = std::max({amax, lam[N - 1], -lam[0]});
        }
        if (!(amax > 0.0)) return std::numeric_limits<double>::infinity();
        return cfg_.cfl * grid_.dx() / amax;
    }

    // One SSP-RK3 step, ending with every interior cell admissible. A run of
    // low dissipation can steer the update itself out of the admissible set
    // (most visibly when strong shocks collide); when a stage or the stepped
    // field goes bad, the whole step is redone first-order from the saved
    // state and counted. A failing retry propagates: the flow is lost.
    void step(double dt) {
        if (!opt_.first_order) {
            saved_ = u_;
            const long fb = fallback_faces_;
            try {
                step_stages(dt, false);
                check_admissible();
                ++steps_;
                return;
            } catch (const SolverError&) {
                u_ = saved_;
                fallback_faces_ = fb;
            }
            ++first_order_steps_;
        }
        step_stages(dt, true);
        check_admissible();
        ++steps_;
    }

    // Post-step assertion: every interior cell admissible; reports the minima
    // of the positivity monitors.
    void scan_state(double& min_rho, double& min_p) const {
        min_rho = min_p = std::numeric_limits<double>::infinity();
        for (int j = 0; j < grid_.n; ++j) {
            double r, p;
            if (!phys_.check_state(u_.at(j), r, p))
                throw SolverError("inadmissible state at cell " + std::to_string(j) + " (x = " +
                                  std::to_string(grid_.center(j)) + ")");
            min_rho = std::min(min_rho, r);
            min_p = std::min(min_p, p);
        }
    }

private:
    void step_stages(double dt, bool first_order) {
        const int n = grid_.n;
        rhs(u_, l_, first_order);
        for (int j = 0; j < n; ++j) stage_.at(j) = u_.at(j) + dt * l_.at(j);
        rhs(stage_, l_, first_order);
        for (int j = 0; j < n; ++j)
            stage_.at(j) = 0.75 * u_.at(j) + 0.25 * (stage_.at(j) + dt * l_.at(j));
        rhs(stage_, l_, first_order);
        for (int j = 0; j < n; ++j)
            u_.at(j) = (1.0 / 3.0) * u_.at(j) + (2.0 / 3.0) * (stage_.at(j) + dt * l_.at(j));
    }

    void check_admissible() const {
        double r, p;
        scan_state(r, p);
    }

    Grid1D grid_;
    P phys_;
    SchemeConfig cfg_;
    BoundarySpec1 bc_;
    RunOptions opt_;
    FieldT u_, stage_, l_, saved_;
    std::vector<Vec<N>> cflux_, iflux_;
    double t_ = 0.0;
    long steps_ = 0;
    long fallback_faces_ = 0;
    long first_order_steps_ = 0;
};

// 2-D Euler solver, dimension by dimension. The y direction reuses the
// x-direction kernels on momentum-swapped column gathers (B = S A S), which
// keeps x/y arithmetic bit-identical and the transposed-state evolution
// exactly symmetric on symmetric problems.
class Solver2D {
public:
    static constexpr int N = 4;
    using FieldT = Field2D<4>;

    Solver2D(const Grid2D& grid, const SchemeConfig& cfg, const BoundarySpec2& bc,
             SourceSpec source = SourceSpec::None, const RunOptions& opt = {})
        : grid_(grid), phys_{cfg.gamma}, cfg_(cfg), bc_(bc), source_(source), opt_(opt),
          u_(grid.nx, grid.ny), stage_(grid.nx, grid.ny), l_(grid.nx, grid.ny),
          saved_(grid.nx, grid.ny), fail_x_(grid.ny), fail_y_(grid.nx) {
        cfg_.validate();
        bc_.validate();
        if (grid.nx < 2 || grid.ny < 2) throw ConfigError("2-D grid needs at least 2x2 cells");
        opt_.workers = std::max(1, opt_.workers);
        const int m = std::max(grid.nx, grid.ny);
        scratch_.resize(opt_.workers);
        for (auto& s : scratch_) {
            s.cells.resize(m + 2 * ghost_width);
            s.cflux.resize(m + 2);
            s.iflux.resize(m + 1);
        }
    }

    FieldT& field() { return u_; }
    const FieldT& field() const { return u_; }
    const Grid2D& grid() const { return grid_; }
    const SchemeConfig& config() const { return cfg_; }
    double time() const { return t_; }
    void set_time(double t) { t_ = t; }
    long steps_taken() const { return steps_; }
    long fallback_faces() const { return fallback_faces_; }
    long first_order_steps() const { return first_order_steps_; }

    void rhs(FieldT& u, FieldT& out) { rhs(u, out, opt_.first_order); }

    void rhs(FieldT& u, FieldT& out, bool first_order) {
        fill_ghost(u, bc_, cfg_.gamma);
        const int nx = grid_.nx, ny = grid_.ny;
        const double dx = grid_.dx(), dy = grid_.dy();
        const double inv_dx = 1.0 / dx, inv_dy = 1.0 / dy;
        for (auto& s : scratch_) s.fallbacks = 0;

        // x sweeps: rows are contiguous, no gather needed.
        std::fill(fail_x_.begin(), fail_x_.end(), -1);
        parallel_rows(ny, opt_.workers, [&](int k, int tid) {
            RowScratch& s = scratch_[tid];
            const Cons2* row = u.row(k);
            for (int c = 0; c <= nx + 1; ++c) s.cflux[c] = phys_.flux(row[c + 1]);
            const int bad = detail::sweep_interfaces(phys_, row, s.cflux.data(), nx, dx, cfg_,
                                                     first_order, s.iflux.data(),
                                                     s.fallbacks);
            if (bad >= 0) {
                fail_x_[k] = bad;
                return;
            }
            Cons2* o = out.row(k) + ghost_width;
            for (int j = 0; j < nx; ++j) o[j] = inv_dx * (s.iflux[j] - s.iflux[j + 1]);
        });
        for (int k = 0; k < ny; ++k)
            if (fail_x_[k] >= 0)
                throw SolverError("inadmissible reconstructed state at x-interface " +
                                  std::to_string(fail_x_[k]) + " in row " + std::to_string(k));

        // y sweeps on momentum-swapped column gathers.
        std::fill(fail_y_.begin(), fail_y_.end(), -1);
        parallel_rows(nx, opt_.workers, [&](int j, int tid) {
            RowScratch& s = scratch_[tid];
            for (int k = -ghost_width; k < ny + ghost_width; ++k)
                s.cells[k + ghost_width] = swap_momentum(u.at(j, k));
            const Cons2* col = s.cells.data();
            for (int c = 0; c <= ny + 1; ++c) s.cflux[c] = phys_.flux(col[c + 1]);
            const int bad = detail::sweep_interfaces(phys_, col, s.cflux.data(), ny, dy, cfg_,
                                                     first_order, s.iflux.data(),
                                                     s.fallbacks);
            if (bad >= 0) {
                fail_y_[j] = bad;
                return;
            }
            for (int k = 0; k < ny; ++k)
                out.at(j, k) += swap_momentum(inv_dy * (s.iflux[k] - s.iflux[k + 1]));
        });
        for (int j = 0; j < nx; ++j)
            if (fail_y_[j] >= 0)
                throw SolverError("inadmissible reconstructed state at y-interface " +
                                  std::to_string(fail_y_[j]) + " in column " +
                                  std::to_string(j));
        for (const auto& s : scratch_) fallback_faces_ += s.fallbacks;

        if (source_ == SourceSpec::GravityPlusY) {
            for (int k = 0; k < ny; ++k)
                for (int j = 0; j < nx; ++j) out.at(j, k) += gravity_source(u.at(j, k));
        }
    }

    double max_stable_dt() {
        fill_ghost(u_, bc_, cfg_.gamma);
        const int nx = grid_.nx, ny = grid_.ny;
        double amax = 0.0, bmax = 0.0;
        Vec<4> lam;
        for (int k = 0; k < ny; ++k) {
            for (int j = -1; j <= nx; ++j) {
                if (!phys_.eigenvalues(u_.at(j, k), lam)) throw dt_scan_error(j, k);
                amax = std::max({amax, lam[3], -lam[0]});
            }
        }
        for (int j = 0; j < nx; ++j) {
            for (int k = -1; k <= ny; ++k) {
                if (!phys_.eigenvalues(swap_momentum(u_.at(j, k)), lam))
                    throw dt_scan_error(j, k);
                bmax = std::max({bmax, lam[3], -lam[0]});
            }
        }
        if (!(amax > 0.0) && !(bmax > 0.0)) return std::numeric_limits<double>::infinity();
        return cfg_.cfl * std::min(grid_.dx() / amax, grid_.dy() / bmax);
    }

    // Same retry contract as the 1-D step: second order first, the saved
    // pre-step field and a first-order redo when the update leaves the
    // admissible set, abort only if the retry fails too.
    void step(double dt) {
        if (!opt_.first_order) {
            saved_ = u_;
            const long fb = fallback_faces_;
            try {
                step_stages(dt, false);
                check_admissible();
                ++steps_;
                return;
            } catch (const SolverError&) {
                u_ = saved_;
                fallback_faces_ = fb;
            }
            ++first_order_steps_;
        }
        step_stages(dt, true);
        check_admissible();
        ++steps_;
    }

    void scan_state(double& min_rho, double& min_p) const {
        min_rho = min_p = std::numeric_limits<double>::infinity();
        for (int k = 0; k < grid_.ny; ++k) {
            for (int j = 0; j < grid_.nx; ++j) {
                double r, p;
                if (!phys_.check_state(u_.at(j, k), r, p))
                    throw SolverError("inadmissible state at cell (" + std::to_string(j) +
                                      ", " + std::to_string(k) + ") (x = " +
                                      std::to_string(grid_.xcenter(j)) + ", y = " +
                                      std::to_string(grid_.ycenter(k)) + ")");
                min_rho = std::min(min_rho, r);
                min_p = std::min(min_p, p);
            }
        }
    }

private:
    void step_stages(double dt, bool first_order) {
        const int nx = grid_.nx, ny = grid_.ny;
        rhs(u_, l_, first_order);
        for (int k = 0; k < ny; ++k)
            for (int j = 0; j < nx; ++j) stage_.at(j, k) = u_.at(j, k) + dt * l_.at(j, k);
        rhs(stage_, l_, first_order);
        for (int k = 0; k < ny; ++k)
            for (int j = 0; j < nx; ++j)
                stage_.at(j, k) =
                    0.75 * u_.at(j, k) + 0.25 * (stage_.at(j, k) + dt * l_.at(j, k));
        rhs(stage_, l_, first_order);
        for (int k = 0; k < ny; ++k)
            for (int j = 0; j < nx; ++j)
                u_.at(j, k) =
                    (1.0 / 3.0) * u_.at(j, k) + (2.0 / 3.0) * (stage_.at(j, k) + dt * l_.at(j, k));
    }

    void check_admissible() const {
        double r, p;
        scan_state(r, p);
    }

    struct RowScratch {
        std::vector<Cons2> cells;
        std::vector<Vec<4>> cflux, iflux;
        long fallbacks = 0;
    };

    SolverError dt_scan_error(int j, int k) const {
        return SolverError("inadmissible state in time-step scan at cell (" +
                           std::to_string(j) + ", " + std::to_string(k) + ")");
    }

    Grid2D grid_;
    EulerPhys2X phys_;
    SchemeConfig cfg_;
    BoundarySpec2 bc_;
    SourceSpec source_;
    RunOptions opt_;
    FieldT u_, stage_, l_, saved_;
    std::vector<RowScratch> scratch_;
    std::vector<int> fail_x_, fail_y_;
    double t_ = 0.0;
    long steps_ = 0;
    long fallback_faces_ = 0;
    long first_order_steps_ = 0;
};

// Advance a solver to t_final exactly: dt = min(stable dt, distance to the
// next snapshot or the end), recomputed once per step from the pre-step
// field; landings assign the target time instead of accumulating.
template <class S>
inline RunStats run_to_time(S& solver, double t_final,
                            const RunHooks<typename S::FieldT>& hooks = {}) {
    if (t_final < solver.time()) throw ConfigError("t_final is before the current time");
    for (size_t i = 1; i < hooks.snapshot_times.size(); ++i)
        if (!(hooks.snapshot_times[i] > hooks.snapshot_times[i - 1]))
            throw ConfigError("snapshot times must be strictly increasing");

    RunStats stats;
    solver.scan_state(stats.min_rho, stats.min_p);

    size_t next_snap = 0;
    auto fire_due = [&] {
        while (next_snap < hooks.snapshot_times.size() &&
               hooks.snapshot_times[next_snap] <= solver.time()) {
            if (hooks.on_snapshot)
                hooks.on_snapshot(hooks.snapshot_times[next_snap], solver.field());
            ++next_snap;
        }
    };
    fire_due();

    const long fallbacks_before = solver.fallback_faces();
    const long fo_steps_before = solver.first_order_steps();
    const auto wall_start = std::chrono::steady_clock::now();
    while (solver.time() < t_final) {
        double target = t_final;
        if (next_snap < hooks.snapshot_times.size() &&
            hooks.snapshot_times[next_snap] < target)
            target = hooks.snapshot_times[next_snap];
        const double remaining = target - solver.time();
        const double stable = solver.max_stable_dt();
        const bool landing = !(stable < remaining);
        const double dt = landing ? remaining : stable;
        if (!(dt > 0.0) || !std::isfinite(dt) ||
            (!landing && dt < 1e-14 * std::max(1.0, t_final)))
            throw SolverError("time step collapsed (dt = " + std::to_string(dt) + " at t = " +
                              std::to_string(solver.time()) + ")");
        double mr, mp;
        try {
            solver.step(dt);
            solver.set_time(landing ? target : solver.time() + dt);
            solver.scan_state(mr, mp);
        } catch (const SolverError& e) {
            throw SolverError(std::string(e.what()) + " [step " +
                              std::to_string(solver.steps_taken()) + ", t = " +
                              std::to_string(solver.time()) + "]");
        }
        ++stats.steps;
        stats.min_rho = std::min(stats.min_rho, mr);
        stats.min_p = std::min(stats.min_p, mp);
        if (hooks.on_step) hooks.on_step({solver.steps_taken(), solver.time(), dt, mr, mp});
        fire_due();
    }
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    stats.fallback_faces = solver.fallback_faces() - fallbacks_before;
    stats.first_order_steps = solver.first_order_steps() - fo_steps_before;
    return stats;
}

}  // namespace hcu
