#include "hcu/postprocess.hpp"

#include <cmath>
#include <cstdlib>

#include "hcu/errors.hpp"
#include "hcu/reconstruct.hpp"

namespace hcu {
namespace {

bool pow2_multiple(int coarse, int fine) {
    if (coarse <= 0 || fine < coarse || fine % coarse != 0) return false;
    const int r = fine / coarse;
    return (r & (r - 1)) == 0;
}

// Limited slope per coarse cell, zero in the two edge cells.
void row_slopes(const double* v, int n, double dx, double* s) {
    s[0] = s[n - 1] = 0.0;
    for (int j = 1; j < n - 1; ++j)
        s[j] = minmod(2.0 * (v[j] - v[j - 1]) / dx, (v[j + 1] - v[j - 1]) / (2.0 * dx),
                      2.0 * (v[j + 1] - v[j]) / dx);
}

// Refine one row by an integer factor m: the average of the linear
// reconstruction over sub-cell r equals its value at the sub-cell center.
void refine_row(const double* v, const double* s, int n, double dx, int m, double* out) {
    for (int j = 0; j < n; ++j) {
        const double slope_step = s[j] * dx;
        for (int r = 0; r < m; ++r)
            out[j * m + r] = v[j] + slope_step * ((r + 0.5) / m - 0.5);
    }
}

void check_same_bounds1(const Grid1D& a, const Grid1D& b) {
    if (a.xmin != b.xmin || a.xmax != b.xmax)
        throw ConfigError("grids cover different intervals");
}

void check_same_bounds2(const Grid2D& a, const Grid2D& b) {
    if (a.xmin != b.xmin || a.xmax != b.xmax || a.ymin != b.ymin || a.ymax != b.ymax)
        throw ConfigError("grids cover different rectangles");
}

}  // namespace

ScalarField1 component_field(const Grid1D& g, const Field1D<3>& f, int comp) {
    ScalarField1 out{g, std::vector<double>(g.n)};
    for (int j = 0; j < g.n; ++j) out.v[j] = f.at(j)[comp];
    return out;
}

ScalarField2 component_field(const Grid2D& g, const Field2D<4>& f, int comp) {
    ScalarField2 out{g, std::vector<double>(static_cast<size_t>(g.nx) * g.ny)};
    for (int k = 0; k < g.ny; ++k)
        for (int j = 0; j < g.nx; ++j) out.at(j, k) = f.at(j, k)[comp];
    return out;
}

ScalarField1 project_refine(const ScalarField1& coarse, const Grid1D& target) {
    check_same_bounds1(coarse.grid, target);
    if (!pow2_multiple(coarse.grid.n, target.n))
        throw ConfigError("projection target must be a power-of-2 refinement");
    const int n = coarse.grid.n, m = target.n / n;
    std::vector<double> s(n);
    row_slopes(coarse.v.data(), n, coarse.grid.dx(), s.data());
    ScalarField1 out{target, std::vector<double>(target.n)};
    refine_row(coarse.v.data(), s.data(), n, coarse.grid.dx(), m, out.v.data());
    return out;
}

ScalarField2 project_refine(const ScalarField2& coarse, const Grid2D& target) {
    check_same_bounds2(coarse.grid, target);
    if (!pow2_multiple(coarse.grid.nx, target.nx) || !pow2_multiple(coarse.grid.ny, target.ny))
        throw ConfigError("projection target must be a power-of-2 refinement");
    const int nxc = coarse.grid.nx, nyc = coarse.grid.ny;
    const int mx = target.nx / nxc, my = target.ny / nyc;

    // x pass: each coarse row -> target.nx columns.
    std::vector<double> mid(static_cast<size_t>(target.nx) * nyc);
    std::vector<double> s(std::max(nxc, nyc));
    for (int k = 0; k < nyc; ++k) {
        const double* row = coarse.v.data() + static_cast<size_t>(k) * nxc;
        row_slopes(row, nxc, coarse.grid.dx(), s.data());
        refine_row(row, s.data(), nxc, coarse.grid.dx(), mx,
                   mid.data() + static_cast<size_t>(k) * target.nx);
    }

    // y pass: each intermediate column -> target.ny rows.
    ScalarField2 out{target, std::vector<double>(static_cast<size_t>(target.nx) * target.ny)};
    std::vector<double> col(nyc), fine_col(target.ny);
    for (int j = 0; j < target.nx; ++j) {
        for (int k = 0; k < nyc; ++k) col[k] = mid[static_cast<size_t>(k) * target.nx + j];
        row_slopes(col.data(), nyc, coarse.grid.dy(), s.data());
        refine_row(col.data(), s.data(), nyc, coarse.grid.dy(), my, fine_col.data());
        for (int k = 0; k < target.ny; ++k) out.at(j, k) = fine_col[k];
    }
    return out;
}

ScalarField1 restrict_average(const ScalarField1& fine, const Grid1D& target) {
    check_same_bounds1(fine.grid, target);
    if (target.n <= 0 || fine.grid.n % target.n != 0)
        throw ConfigError("restriction target does not nest in the fine grid");
    const int m = fine.grid.n / target.n;
    ScalarField1 out{target, std::vector<double>(target.n)};
    for (int j = 0; j < target.n; ++j) {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += fine.v[j * m + r];
        out.v[j] = s / m;
    }
    return out;
}

ScalarField2 restrict_average(const ScalarField2& fine, const Grid2D& target) {
    check_same_bounds2(fine.grid, target);
    if (target.nx <= 0 || target.ny <= 0 || fine.grid.nx % target.nx != 0 ||
        fine.grid.ny % target.ny != 0)
        throw ConfigError("restriction target does not nest in the fine grid");
    const int mx = fine.grid.nx / target.nx, my = fine.grid.ny / target.ny;
    ScalarField2 out{target, std::vector<double>(static_cast<size_t>(target.nx) * target.ny)};
    for (int k = 0; k < target.ny; ++k) {
        for (int j = 0; j < target.nx; ++j) {
            double s = 0.0;
            for (int r = 0; r < my; ++r)
                for (int q = 0; q < mx; ++q) s += fine.at(j * mx + q, k * my + r);
            out.at(j, k) = s / (mx * my);
        }
    }
    return out;
}

ScalarField2 cesaro_average(const std::vector<ScalarField2>& fields) {
    if (fields.empty()) throw ConfigError("cesaro_average needs at least one field");
    const ScalarField2& first = fields.front();
    for (const auto& f : fields) {
        check_same_bounds2(f.grid, first.grid);
        if (f.grid.nx != first.grid.nx || f.grid.ny != first.grid.ny)
            throw ConfigError("cesaro_average inputs must share one grid");
    }
    ScalarField2 out{first.grid, std::vector<double>(first.v.size(), 0.0)};
    for (const auto& f : fields)
        for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += f.v[i];
    const double inv = 1.0 / static_cast<double>(fields.size());
    for (double& x : out.v) x *= inv;
    return out;
}

double l1_error(const ScalarField1& a, const ScalarField1& b) {
    if (a.grid.n != b.grid.n) throw ConfigError("l1_error: grid mismatch");
    check_same_bounds1(a.grid, b.grid);
    double s = 0.0;
    for (int j = 0; j < a.grid.n; ++j) s += std::abs(a.v[j] - b.v[j]);
    return s * a.grid.dx();
}

double l1_error(const ScalarField2& a, const ScalarField2& b) {
    if (a.grid.nx != b.grid.nx || a.grid.ny != b.grid.ny)
        throw ConfigError("l1_error: grid mismatch");
    check_same_bounds2(a.grid, b.grid);
    double s = 0.0;
    for (size_t i = 0; i < a.v.size(); ++i) s += std::abs(a.v[i] - b.v[i]);
    return s * a.grid.dx() * a.grid.dy();
}

double l1_norm(const ScalarField1& a) {
    double s = 0.0;
    for (double x : a.v) s += std::abs(x);
    return s * a.grid.dx();
}

double l1_norm(const ScalarField2& a) {
    double s = 0.0;
    for (double x : a.v) s += std::abs(x);
    return s * a.grid.dx() * a.grid.dy();
}

double total(const ScalarField1& a) {
    double s = 0.0;
    for (double x : a.v) s += x;
    return s * a.grid.dx();
}

double total(const ScalarField2& a) {
    double s = 0.0;
    for (double x : a.v) s += x;
    return s * a.grid.dx() * a.grid.dy();
}

}  // namespace hcu
