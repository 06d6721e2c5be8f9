#pragma once

#include <cstdint>
#include <random>

namespace qevo {

/// Seeded random source built on std::mt19937_64, whose output sequence is
/// pinned by the standard. The value-to-double and value-to-range mappings
/// are done by hand because std::uniform_real_distribution and friends are
/// implementation-defined, which would break bit-identical runs across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool next_bool() { return (gen_() >> 63) != 0; }

    /// Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    /// Deterministic per-index seed derivation (splitmix64 finalizer), so a
    /// population of solvers gets independent streams from one master seed
    /// no matter in which order the members are evaluated.
    static std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t index) {
        std::uint64_t x = master_seed + (index + 1) * 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace qevo
