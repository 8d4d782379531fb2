#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace llmgpr {

// mt19937_64 engine (its byte stream is pinned by the standard) with
// hand-rolled uniform/normal mappings, so sampled values do not depend on
// the stdlib's unspecified distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // (0, 1]
    double uniform_pos() {
        return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Box-Muller, standard normal.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform integer in [0, n). Modulo bias is irrelevant at the scales here.
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }

    // Derived deterministic substream; consumes one draw.
    Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace llmgpr
