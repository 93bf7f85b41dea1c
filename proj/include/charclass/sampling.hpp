#pragma once

#include "ratfun.hpp"

#include <cstdint>
#include <random>

namespace charclass {

// Seeded generator with platform-independent draws: raw mt19937_64 output
// reduced by modulo (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
    // Uniform in [lo, hi].
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return (engine_() >> 17) & 1; }

private:
    std::mt19937_64 engine_;
};

// Polynomial of degree <= max_degree (possibly zero).
UPoly random_upoly(Rng& rng, unsigned p, int max_degree);
UPoly random_nonzero_upoly(Rng& rng, unsigned p, int max_degree);
UPoly random_monic(Rng& rng, unsigned p, int degree);

// num and den of degree <= max_degree each; may be zero.
RatFun random_ratfun(Rng& rng, unsigned p, int max_degree);
RatFun random_nonzero_ratfun(Rng& rng, unsigned p, int max_degree);

} // namespace charclass
