#include "hcu/snapshot.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hcu/errors.hpp"
#include "hcu/euler.hpp"

namespace hcu {
namespace {

constexpr char kMagic[4] = {'H', 'C', 'U', '1'};

struct CsvWriter {
    std::FILE* f;
    char buf[32];

    void value(double x, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        std::fputs(buf, f);
        std::fputc(sep, f);
    }
};

std::FILE* open_or_throw(const std::string& path, const char* mode) {
    std::FILE* f = std::fopen(path.c_str(), mode);
    if (!f) throw IoError("cannot open " + path);
    return f;
}

void close_or_throw(std::FILE* f, const std::string& path) {
    if (std::fclose(f) != 0) throw IoError("write failed for " + path);
}

void put_u32(std::FILE* f, uint32_t v) { std::fwrite(&v, sizeof v, 1, f); }

}  // namespace

void write_snapshot(const Grid1D& g, const Field1D<3>& f, double gamma,
                    const std::string& path, SnapshotFormat fmt) {
    if (fmt == SnapshotFormat::Csv) {
        std::FILE* out = open_or_throw(path, "w");
        CsvWriter w{out, {}};
        std::fputs("x,rho,u,p,E\n", out);
        for (int j = 0; j < g.n; ++j) {
            const Prim1 q = cons_to_prim(f.at(j), gamma);
            w.value(g.center(j), ',');
            w.value(q.rho, ',');
            w.value(q.u, ',');
            w.value(q.p, ',');
            w.value(f.at(j)[2], '\n');
        }
        close_or_throw(out, path);
        return;
    }
    std::FILE* out = open_or_throw(path, "wb");
    std::fwrite(kMagic, 1, 4, out);
    put_u32(out, 1);
    put_u32(out, static_cast<uint32_t>(g.n));
    for (int j = 0; j < g.n; ++j) {
        const Prim1 q = cons_to_prim(f.at(j), gamma);
        const double tuple[5] = {g.center(j), q.rho, q.u, q.p, f.at(j)[2]};
        std::fwrite(tuple, sizeof(double), 5, out);
    }
    close_or_throw(out, path);
}

void write_snapshot(const Grid2D& g, const Field2D<4>& f, double gamma,
                    const std::string& path, SnapshotFormat fmt) {
    if (fmt == SnapshotFormat::Csv) {
        std::FILE* out = open_or_throw(path, "w");
        CsvWriter w{out, {}};
        std::fputs("x,y,rho,u,v,p,E\n", out);
        for (int k = 0; k < g.ny; ++k) {
            for (int j = 0; j < g.nx; ++j) {
                const Prim2 q = cons_to_prim(f.at(j, k), gamma);
                w.value(g.xcenter(j), ',');
                w.value(g.ycenter(k), ',');
                w.value(q.rho, ',');
                w.value(q.u, ',');
                w.value(q.v, ',');
                w.value(q.p, ',');
                w.value(f.at(j, k)[3], '\n');
            }
        }
        close_or_throw(out, path);
        return;
    }
    std::FILE* out = open_or_throw(path, "wb");
    std::fwrite(kMagic, 1, 4, out);
    put_u32(out, 2);
    put_u32(out, static_cast<uint32_t>(g.nx));
    put_u32(out, static_cast<uint32_t>(g.ny));
    for (int k = 0; k < g.ny; ++k) {
        for (int j = 0; j < g.nx; ++j) {
            const Prim2 q = cons_to_prim(f.at(j, k), gamma);
            const double tuple[7] = {g.xcenter(j), g.ycenter(k), q.rho, q.u,
                                     q.v,          q.p,          f.at(j, k)[3]};
            std::fwrite(tuple, sizeof(double), 7, out);
        }
    }
    close_or_throw(out, path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    CsvTable t;
    if (!std::getline(in, t.header)) throw IoError("empty csv: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        t.rows.push_back(std::move(row));
    }
    return t;
}

BinSnapshot read_bin_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("bad magic in " + path);
    BinSnapshot s;
    uint32_t ndim = 0, nx = 0, ny = 0;
    if (!in.read(reinterpret_cast<char*>(&ndim), 4)) throw IoError("truncated " + path);
    if (ndim != 1 && ndim != 2) throw IoError("bad dimensionality in " + path);
    if (!in.read(reinterpret_cast<char*>(&nx), 4)) throw IoError("truncated " + path);
    if (ndim == 2 && !in.read(reinterpret_cast<char*>(&ny), 4))
        throw IoError("truncated " + path);
    s.ndim = static_cast<int>(ndim);
    s.nx = static_cast<int>(nx);
    s.ny = static_cast<int>(ny);
    const size_t cells = ndim == 1 ? nx : static_cast<size_t>(nx) * ny;
    const size_t per_cell = ndim == 1 ? 5 : 7;
    s.payload.resize(cells * per_cell);
    if (!in.read(reinterpret_cast<char*>(s.payload.data()),
                 static_cast<std::streamsize>(s.payload.size() * sizeof(double))))
        throw IoError("truncated " + path);
    return s;
}

}  // namespace hcu
