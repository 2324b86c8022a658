#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lec {

/// 64-bit Mersenne Twister; all draws go through the helpers below so results
/// do not depend on the standard library's distribution implementations.
using Rng = std::mt19937_64;

/// Generator for a named substream of a run seed. Distinct (name, index)
/// pairs give independent streams.
Rng substream(std::uint64_t seed, std::string_view name, std::uint64_t index = 0);

/// Uniform integer in [0, bound). bound must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1).
double uniform_unit(Rng& rng);

}  // namespace lec
