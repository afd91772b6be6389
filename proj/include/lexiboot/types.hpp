#pragma once

#include <compare>
#include <cstdint>
#include <random>

namespace lexiboot {

using Rng = std::mt19937_64;
using Count = std::uint32_t;

struct ObjectId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

struct WordId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(WordId, WordId) = default;
};

// Uniform integer in [0, bound). bound must be positive.
inline std::uint32_t uniform_index(Rng& rng, std::uint32_t bound) {
    return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng);
}

}  // namespace lexiboot
