// bfld.hpp — "BFLD1" binary field dumps.
//
// Layout: ASCII header line "BFLD1 <n> <half_side>\n" followed by n²
// little-endian (re, im) pairs of 64-bit floats, row-major, j (real axis)
// fastest.  half_side is printed with 17 significant digits so the header
// round-trips bit-exactly.

#pragma once

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "beltrami/grid.hpp"

namespace beltrami {

struct BfldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void write_bfld(const std::string& path, const GridField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BfldError("write_bfld: cannot open " + path);
    char header[64];
    std::snprintf(header, sizeof(header), "BFLD1 %d %.17g\n", f.grid.n, f.grid.half_side);
    out.write(header, static_cast<std::streamsize>(std::strlen(header)));
    static_assert(sizeof(Complex) == 16, "Complex must be two little-endian f64");
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(Complex)));
    if (!out) throw BfldError("write_bfld: short write to " + path);
}

inline GridField read_bfld(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BfldError("read_bfld: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw BfldError("read_bfld: missing header in " + path);
    std::istringstream hs(header);
    std::string magic;
    int n = 0;
    double half_side = 0.0;
    if (!(hs >> magic >> n >> half_side) || magic != "BFLD1")
        throw BfldError("read_bfld: bad header in " + path);
    Grid g = make_grid(n, half_side);
    GridField f(g);
    const std::streamsize want =
        static_cast<std::streamsize>(f.values.size() * sizeof(Complex));
    in.read(reinterpret_cast<char*>(f.values.data()), want);
    if (in.gcount() != want)
        throw BfldError("read_bfld: payload shorter than n^2 * 16 bytes in " + path);
    char extra;
    if (in.read(&extra, 1))
        throw BfldError("read_bfld: payload longer than n^2 * 16 bytes in " + path);
    return f;
}

} // namespace beltrami
