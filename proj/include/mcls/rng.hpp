#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mcls {

// Deterministic random source. std::mt19937_64 has a fully specified output
// sequence; the float/int mappings below avoid std::*_distribution, whose
// algorithms are implementation-defined, so identical seeds give identical
// streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Derive an independent stream, e.g. per (seed, epoch).
    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        Rng r(0);
        r.gen_.seed(seq);
        return r;
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(gen_() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Unbiased uniform integer on [0, n), n >= 1 (rejection sampling).
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Fisher-Yates; deterministic for a fixed seed, unlike std::shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace mcls
