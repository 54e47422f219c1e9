#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "pforge/errors.hpp"

namespace pforge {

using cxd = std::complex<double>;

/// Unit-average-energy QAM alphabet. Points live on the integer grid
/// (2gx - side + 1, 2gy - side + 1) scaled to unit mean energy; the grid
/// coordinates are kept so symbol differences can be indexed compactly.
struct Constellation {
    int order = 0;                              // M
    int side = 0;                               // I/Q grid side length
    double scale = 1.0;                         // grid -> unit-energy scaling
    std::vector<cxd> points;                    // size M, row-major over the I/Q grid
    std::vector<std::array<int, 2>> grid;       // per point: (gx, gy) in [0, side)

    int bits_per_symbol() const { return static_cast<int>(std::lround(std::log2(order))); }
};

/// M in {4, 16, 64}: square QAM. M = 32: 6x6 cross (corners removed).
inline Constellation make_qam(int m) {
    Constellation c;
    c.order = m;
    switch (m) {
        case 4: c.side = 2; break;
        case 16: c.side = 4; break;
        case 32: c.side = 6; break;
        case 64: c.side = 8; break;
        default:
            throw UnsupportedOrder("make_qam: unsupported constellation order " + std::to_string(m));
    }
    double energy = 0.0;
    for (int gx = 0; gx < c.side; ++gx) {
        for (int gy = 0; gy < c.side; ++gy) {
            if (m == 32) {
                const bool corner = (gx == 0 || gx == c.side - 1) && (gy == 0 || gy == c.side - 1);
                if (corner) continue;
            }
            const double re = 2.0 * gx - c.side + 1;
            const double im = 2.0 * gy - c.side + 1;
            c.points.emplace_back(re, im);
            c.grid.push_back({gx, gy});
            energy += re * re + im * im;
        }
    }
    c.scale = 1.0 / std::sqrt(energy / m);
    for (auto& p : c.points) p *= c.scale;
    return c;
}

/// M^n with overflow check (indices are 64-bit).
inline std::uint64_t constellation_count(int m, int n_t) {
    std::uint64_t k = 1;
    for (int i = 0; i < n_t; ++i) {
        if (k > UINT64_MAX / static_cast<std::uint64_t>(m))
            throw Overflow("constellation_count: M^Nt exceeds 64 bits");
        k *= static_cast<std::uint64_t>(m);
    }
    return k;
}

/// Little-endian radix-M digits of a symbol-vector index.
inline std::vector<int> symbol_digits(const Constellation& c, int n_t, std::uint64_t k) {
    if (k >= constellation_count(c.order, n_t))
        throw IndexOutOfRange("symbol index " + std::to_string(k) + " out of range");
    std::vector<int> d(n_t);
    for (int i = 0; i < n_t; ++i) {
        d[i] = static_cast<int>(k % c.order);
        k /= c.order;
    }
    return d;
}

inline std::vector<cxd> symbol_vector(const Constellation& c, int n_t, std::uint64_t k) {
    const auto d = symbol_digits(c, n_t, k);
    std::vector<cxd> x(n_t);
    for (int i = 0; i < n_t; ++i) x[i] = c.points[d[i]];
    return x;
}

/// All M^Nt difference vectors x_k - x_m, indexed by m. Entry m == k is zero.
inline std::vector<std::vector<cxd>> difference_vectors(const Constellation& c, int n_t, std::uint64_t k) {
    const std::uint64_t count = constellation_count(c.order, n_t);
    const auto xk = symbol_vector(c, n_t, k);
    std::vector<std::vector<cxd>> out(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        auto xm = symbol_vector(c, n_t, m);
        for (int i = 0; i < n_t; ++i) xm[i] = xk[i] - xm[i];
        out[m] = std::move(xm);
    }
    return out;
}

}  // namespace pforge
