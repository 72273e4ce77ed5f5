// Deterministic random number generation.
//
// Everything random in the toolkit flows through these helpers so that
// results are bit-reproducible across platforms and thread counts:
//   - Rng: a splitmix64 sequential stream, seeded per consumer
//     (stream id = consumer index), used by the data-generating processes.
//   - keyed_uniform: counter-based random access used by DrawSet, where the
//     value of draw d in slot s for consumer c must not depend on which
//     other slots were generated.
// Uniforms are mapped into the open interval (0,1); normals go through the
// inverse cdf rather than std::normal_distribution, whose output is
// implementation-defined.
#pragma once

#include <cstdint>

#include "ssearch/normal.hpp"

namespace ssearch {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stateless mix of a key tuple into one 64-bit word.
inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a;
    std::uint64_t h = splitmix64(s);
    s = h ^ b;
    return splitmix64(s);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_key(mix_key(a, b), c);
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                             std::uint64_t d) {
    return mix_key(mix_key(a, b, c), d);
}

// (0,1) strictly: offset by half an ulp of the 53-bit grid so 0 and 1 are
// unreachable, which keeps log() and norm_icdf() calls safe.
inline double u64_to_open_unit(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

inline double keyed_uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                            std::uint64_t c) {
    return u64_to_open_unit(mix_key(seed, a, b, c));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix_key(seed, 0x5eedULL)) {}

    // Independent substream, e.g. one per consumer.
    Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix_key(seed, stream, 0x5eedULL)) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    double uniform() { return u64_to_open_unit(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() { return norm_icdf(uniform()); }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    // Exponential with the given mean (scale = 1/rate).
    double exponential(double scale) { return -scale * std::log(1.0 - uniform()); }

    bool bernoulli(double p) { return uniform() < p; }

  private:
    std::uint64_t state_;
};

}  // namespace ssearch
