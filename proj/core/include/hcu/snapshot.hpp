#pragma once

#include <string>
#include <vector>

#include "hcu/field.hpp"
#include "hcu/grid.hpp"

namespace hcu {

enum class SnapshotFormat { Csv, Bin };

// CSV: header `x,rho,u,p,E` (1-D) or `x,y,rho,u,v,p,E` (2-D), one row per
// cell in row-major order (x fastest), 17 significant digits.
// BIN: little-endian; magic "HCU1", then u32 ndim, u32 nx [, u32 ny], then
// per-cell f64 tuples with exactly the CSV columns in the same order.
void write_snapshot(const Grid1D& g, const Field1D<3>& f, double gamma,
                    const std::string& path, SnapshotFormat fmt);
void write_snapshot(const Grid2D& g, const Field2D<4>& f, double gamma,
                    const std::string& path, SnapshotFormat fmt);

// Readers for round-trip checks and downstream tooling.
struct CsvTable {
    std::string header;
    std::vector<std::vector<double>> rows;
};
CsvTable read_csv(const std::string& path);

struct BinSnapshot {
    int ndim = 0;
    int nx = 0, ny = 0;
    std::vector<double> payload;  // row-major cell tuples
};
BinSnapshot read_bin_snapshot(const std::string& path);

}  // namespace hcu
