#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace laea {

/// Deterministic random source. All distributions are derived from raw
/// mt19937_64 output with explicit arithmetic: std::*_distribution and
/// std::shuffle are implementation-defined and would break the
/// byte-identical-rerun contract across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    /// Unbiased uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal variate (Box-Muller; the paired value is cached).
    double normal();

    double normal(double mean, double stddev) {
        return mean + stddev * normal();
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::mt19937_64 engine_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// Collision-resistant combination of a master seed with a stream key, so
/// that derived streams (per problem, per run, per purpose) stay unrelated.
std::uint64_t mix_seeds(std::uint64_t seed, std::uint64_t key);

/// FNV-1a, for deriving stream keys from names.
std::uint64_t hash_string(std::string_view text);

}  // namespace laea
