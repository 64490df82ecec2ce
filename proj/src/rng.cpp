#include "qres/rng.hpp"

#include <limits>

#include "qres/field.hpp"

namespace qres {

std::uint64_t Rng::below(std::uint64_t n)
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

long long Rng::between(long long lo, long long hi)
{
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar Rng::scalar(Field f)
{
    if (f.is_rational())
        return Scalar(f, between(-3, 3));
    return Scalar(f, static_cast<long long>(below(f.characteristic())));
}

Scalar Rng::nonzero_scalar(Field f)
{
    if (f.is_rational()) {
        long long v = between(1, 3);
        return Scalar(f, coin() ? v : -v);
    }
    return Scalar(f, 1 + static_cast<long long>(below(f.characteristic() - 1)));
}

}  // namespace qres
