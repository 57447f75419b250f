#pragma once

#include <vector>

#include "hcu/grid.hpp"
#include "hcu/vec.hpp"

namespace hcu {

// Two ghost cells per side: the reconstruction stencil at the first interior
// interface reads cells j-1 .. j+2.
inline constexpr int ghost_width = 2;

// Cell-averaged states over a 1-D grid, ghost cells included.
// Valid indices: j in [-ghost_width, n + ghost_width).
template <int N>
struct Field1D {
    int n = 0;
    std::vector<Vec<N>> data;

    Field1D() = default;
    explicit Field1D(int n_cells) : n(n_cells), data(n_cells + 2 * ghost_width, Vec<N>{}) {}

    Vec<N>& at(int j) { return data[j + ghost_width]; }
    const Vec<N>& at(int j) const { return data[j + ghost_width]; }
};

// Row-major 2-D storage, x contiguous: interior cell (j, k) with
// j in [-ghost_width, nx + ghost_width), k likewise for ny.
template <int N>
struct Field2D {
    int nx = 0, ny = 0;
    int stride = 0;
    std::vector<Vec<N>> data;

    Field2D() = default;
    Field2D(int nx_, int ny_)
        : nx(nx_), ny(ny_), stride(nx_ + 2 * ghost_width),
          data(static_cast<size_t>(nx_ + 2 * ghost_width) * (ny_ + 2 * ghost_width), Vec<N>{}) {}

    Vec<N>& at(int j, int k) { return data[idx(j, k)]; }
    const Vec<N>& at(int j, int k) const { return data[idx(j, k)]; }

    // Pointer to the start of row k's ghost cell j = -ghost_width; the row is
    // contiguous, which the sweep kernels rely on.
    Vec<N>* row(int k) { return data.data() + idx(-ghost_width, k); }
    const Vec<N>* row(int k) const { return data.data() + idx(-ghost_width, k); }

private:
    size_t idx(int j, int k) const {
        return static_cast<size_t>(k + ghost_width) * stride + (j + ghost_width);
    }
};

}  // namespace hcu
