#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace backedge {

/// The generator behind every seeded operation. Outputs that depend on it
/// record `rng_id`; changing the algorithm means bumping the suffix.
using Rng = std::mt19937_64;
inline constexpr const char * rng_id = "mt19937_64/v1";

/// Uniform integer in [0, bound) by rejection, identical on every platform
/// (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(Rng & rng, std::uint64_t bound)
{
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T> & items, Rng & rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
}

} // namespace backedge
