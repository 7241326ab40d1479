#pragma once

#include <cmath>
#include <cstdint>

#include "braingraph/matrix.hpp"

namespace braingraph {

// Splittable counter-style generator (SplittableRandom construction: additive
// counter + 64-bit finalizer). State is two words, draws are pure functions of
// (seed, draw index), so identical seeds give identical sequences on every
// platform and split() derives independent child streams for parallel workers.
class RngStream {
public:
    explicit RngStream(uint64_t seed) : state_(mix64(seed)), gamma_(mix_gamma(seed + kGolden)) {}

    uint64_t next_u64() { return mix64(state_ += gamma_); }

    // Strictly inside (0,1): 53-bit mantissa offset by half an ulp.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Box-Muller, cosine branch only; two uniforms per draw.
    double next_normal() {
        double u1 = next_uniform();
        double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    // -log(-log(u)), finite because u never touches {0,1}.
    double next_gumbel() { return -std::log(-std::log(next_uniform())); }

    bool next_bernoulli(double p_true) { return next_uniform() < p_true; }

    // Unbiased integer in [0, n) by rejection.
    uint64_t next_below(uint64_t n) {
        if (n == 0) return 0;
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Deterministic child stream; advances this stream by two draws.
    RngStream split() {
        uint64_t s = next_u64();
        uint64_t g = next_u64();
        return RngStream(s, mix_gamma(g));
    }

private:
    RngStream(uint64_t state, uint64_t gamma) : state_(state), gamma_(gamma) {}

    static constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    static uint64_t mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Odd gamma with enough bit transitions to drive the Weyl sequence.
    static uint64_t mix_gamma(uint64_t z) {
        z = mix64(z) | 1ULL;
        int transitions = __builtin_popcountll(z ^ (z >> 1));
        return (transitions < 24) ? z ^ 0xaaaaaaaaaaaaaaaaULL : z;
    }

    uint64_t state_;
    uint64_t gamma_;
};

inline Matrix uniform_matrix(RngStream& rng, int rows, int cols, double lo, double hi) {
    Matrix m(rows, cols);
    for (double& v : m.data) v = lo + (hi - lo) * rng.next_uniform();
    return m;
}

inline Matrix normal_matrix(RngStream& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (double& v : m.data) v = rng.next_normal();
    return m;
}

inline Matrix gumbel_matrix(RngStream& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (double& v : m.data) v = rng.next_gumbel();
    return m;
}

}  // namespace braingraph
