#pragma once

#include <cstdint>
#include <random>

namespace qres {

class Field;
class Scalar;

// Seeded generator. Draws are reduced by hand so the stream is identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    long long between(long long lo, long long hi);
    bool coin(unsigned num = 1, unsigned den = 2) { return below(den) < num; }
    // Uniform over F_p; small integers in [-3, 3] for the rationals.
    Scalar scalar(Field f);
    Scalar nonzero_scalar(Field f);
    Rng split() { return Rng(next()); }

private:
    std::mt19937_64 engine_;
};

}  // namespace qres
