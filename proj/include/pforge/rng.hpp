#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace pforge {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the i-th member of a seeded family (channel draws, MC blocks).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index + 1));
}

/// Deterministic complex-Gaussian stream. Variates are generated with the
/// polar transform from explicit 53-bit uniforms, so the sequence depends
/// only on the mt19937_64 stream, not on std::normal_distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {  // strictly inside (0,1)
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    }

    /// CN(0,1): unit-variance circularly symmetric complex Gaussian.
    std::complex<double> complex_unit() {
        const double r = std::sqrt(-std::log(uniform01()));
        const double th = 2.0 * std::numbers::pi * uniform01();
        return {r * std::cos(th), r * std::sin(th)};
    }

    /// Real N(0,1).
    double real_unit() {
        const double r = std::sqrt(-2.0 * std::log(uniform01()));
        return r * std::cos(2.0 * std::numbers::pi * uniform01());
    }

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace pforge
