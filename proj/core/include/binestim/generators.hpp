#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "binestim/model.hpp"

namespace binestim {

enum class Profile { Uniform, Halves, Mixed };

/// Throws BadParameter for unknown names.
Profile parse_profile(std::string_view name);
std::string_view to_string(Profile profile);

/// Announced sizes live on a 1/1000 grid (halves: exactly 1/2). Actual sizes
/// are drawn uniformly from a 120-step grid across the closed band, or from
/// its two endpoints when `endpoints_only` is set.
inline constexpr std::int64_t kSizeGrid = 1000;
inline constexpr std::int64_t kBandSteps = 120;

/// uniform: announced uniform on (0, 1]; halves: all 1/2; mixed: each item
/// picks one of (0, 1/4], (1/3, 1/2], (1/2, 1] with equal probability.
Instance gen_random(std::size_t n, const Rational& delta, std::uint64_t seed, Profile profile,
                    bool endpoints_only = false);

/// Announced sizes in (1/(3(1 - delta)), 1], so every actual size exceeds
/// 1/3. Throws BadParameter when that range is empty (delta >= 2/3).
Instance gen_two_per_bin(std::size_t n, const Rational& delta, std::uint64_t seed, bool endpoints_only = false);

}  // namespace binestim
