// Microbenchmarks for the hot kernels: the two interface fluxes in 1-D and
// 2-D, the hat-state eigendecomposition, and a full 2-D tendency evaluation.
// The comparison of interest is classical vs characteristic cost per
// interface.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hcu/hcu.hpp"

namespace {

using namespace hcu;

constexpr double kGamma = 1.4;

std::vector<Cons1> random_states1(int n) {
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    auto u = [&](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen);
    };
    std::vector<Cons1> out(n);
    for (auto& s : out) s = prim_to_cons(Prim1{u(0.4, 3.0), u(-1.0, 1.0), u(0.4, 3.0)}, kGamma);
    return out;
}

std::vector<Cons2> random_states2(int n) {
    std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
    auto u = [&](double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen);
    };
    std::vector<Cons2> out(n);
    for (auto& s : out)
        s = prim_to_cons(Prim2{u(0.4, 3.0), u(-1.0, 1.0), u(-1.0, 1.0), u(0.4, 3.0)}, kGamma);
    return out;
}

void bm_cu_flux_1d(benchmark::State& state) {
    const auto cells = random_states1(1 << 12);
    const double dx = 1.0 / 256.0;
    EulerPhys1 phys{kGamma};
    size_t i = 0;
    for (auto _ : state) {
        Vec<3> out{};
        cu_interface_flux(phys, &cells[i], dx, 1e-10, Reconstruction::Conservative, false, out);
        benchmark::DoNotOptimize(out);
        i = (i + 1) & (cells.size() - 5);
    }
}
BENCHMARK(bm_cu_flux_1d);

void bm_lcd_flux_1d(benchmark::State& state) {
    const auto cells = random_states1(1 << 12);
    const double dx = 1.0 / 256.0;
    EulerPhys1 phys{kGamma};
    size_t i = 0;
    for (auto _ : state) {
        Vec<3> out{};
        lcd_interface_flux(phys, &cells[i], phys.flux(cells[i + 1]), phys.flux(cells[i + 2]),
                           dx, 1e-10, Reconstruction::Characteristic, false, out);
        benchmark::DoNotOptimize(out);
        i = (i + 1) & (cells.size() - 5);
    }
}
BENCHMARK(bm_lcd_flux_1d);

void bm_cu_flux_2d(benchmark::State& state) {
    const auto cells = random_states2(1 << 12);
    const double dx = 1.0 / 256.0;
    EulerPhys2X phys{kGamma};
    size_t i = 0;
    for (auto _ : state) {
        Vec<4> out{};
        cu_interface_flux(phys, &cells[i], dx, 1e-10, Reconstruction::Conservative, false, out);
        benchmark::DoNotOptimize(out);
        i = (i + 1) & (cells.size() - 5);
    }
}
BENCHMARK(bm_cu_flux_2d);

void bm_lcd_flux_2d(benchmark::State& state) {
    const auto cells = random_states2(1 << 12);
    const double dx = 1.0 / 256.0;
    EulerPhys2X phys{kGamma};
    size_t i = 0;
    for (auto _ : state) {
        Vec<4> out{};
        lcd_interface_flux(phys, &cells[i], phys.flux(cells[i + 1]), phys.flux(cells[i + 2]),
                           dx, 1e-10, Reconstruction::Characteristic, false, out);
        benchmark::DoNotOptimize(out);
        i = (i + 1) & (cells.size() - 5);
    }
}
BENCHMARK(bm_lcd_flux_2d);

void bm_lcd_basis_2d(benchmark::State& state) {
    const auto cells = random_states2(1 << 12);
    size_t i = 0;
    for (auto _ : state) {
        const Basis<4> b = lcd_basis(hat_average(cells[i], cells[i + 1], kGamma), kGamma,
                                     Axis::X);
        benchmark::DoNotOptimize(b);
        i = (i + 1) & (cells.size() - 2);
    }
}
BENCHMARK(bm_lcd_basis_2d);

void bm_rhs_2d(benchmark::State& state) {
    const Scheme scheme = state.range(0) == 0 ? Scheme::OldCU : Scheme::NewLcdCU;
    const BenchmarkCase c = make_case("kelvin_helmholtz");
    const Grid2D g = case_grid(c, 128, 128);
    Solver2D solver(g, SchemeConfig::make(scheme, c.gamma), c.bc2);
    solver.field() = init_field(c, g);
    Field2D<4> out(g.nx, g.ny);
    for (auto _ : state) {
        solver.rhs(solver.field(), out);
        benchmark::DoNotOptimize(out.at(5, 5));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(g.nx) * g.ny);
}
BENCHMARK(bm_rhs_2d)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
