#pragma once

#include "hypell.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hypell::test {

/// Seeded generator for property tests; every suite takes a fixed seed.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    DivisorClass divisor(std::size_t r, int lo, int hi)
    {
        DivisorClass c{uniform(lo, hi), uniform(lo, hi), {}};
        for (std::size_t i = 0; i < r; ++i)
            c.d.emplace_back(uniform(lo, hi));
        return c;
    }

    DivisorClass uniform_bundle(int max_ab, int max_r, int max_d)
    {
        auto r = static_cast<std::size_t>(uniform(1, max_r));
        return DivisorClass::uniform(uniform(1, max_ab), uniform(1, max_ab), r, uniform(1, max_d));
    }

    const SurfaceData& surface() { return surface_params(uniform(1, 7)); }
    const SurfaceData& odd_surface() { return surface_params(2 * uniform(0, 3) + 1); }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Plain 64-bit transcription of the pairing, kept apart from the library.
inline long long pairing64(long long a, long long b, const std::vector<long long>& d, long long a2, long long b2,
                           const std::vector<long long>& d2)
{
    long long v = a * b2 + a2 * b;
    for (std::size_t i = 0; i < d.size(); ++i)
        v -= d[i] * d2[i];
    return v;
}

/// Least k with 2k^2 >= r by linear search.
inline long long least_k64(long long r)
{
    long long k = 0;
    while (2 * k * k < r)
        ++k;
    return k;
}

inline Rational q(long long p, long long d = 1) { return Rational(p, d); }

} // namespace hypell::test
