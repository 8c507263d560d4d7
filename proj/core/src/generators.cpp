#include "binestim/generators.hpp"

#include <random>
#include <string>
#include <vector>

#include "binestim/errors.hpp"

namespace binestim {
namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational draw_actual(std::mt19937_64& rng, const Rational& announced, const Rational& delta, bool endpoints_only) {
  const Band b = band(announced, delta);
  // A zero lower end (delta = 1) is excluded so sizes stay in (0, 1].
  const std::int64_t first = b.lower.sign() == 0 ? 1 : 0;
  std::int64_t step;
  if (endpoints_only) {
    step = first == 1 ? kBandSteps : (draw(rng, 0, 1) == 0 ? 0 : kBandSteps);
  } else {
    step = draw(rng, first, kBandSteps);
  }
  return b.lower + (b.upper - b.lower) * Rational(step, kBandSteps);
}

Instance finish(const Rational& delta, std::vector<Rational> announced, std::mt19937_64& rng, bool endpoints_only) {
  Instance inst{Announcement(delta, std::move(announced)), {}};
  inst.actual.reserve(inst.announcement.size());
  for (const auto& a : inst.announcement.sizes()) inst.actual.push_back(draw_actual(rng, a, delta, endpoints_only));
  return inst;
}

void check_delta(const Rational& delta) {
  if (delta <= Rational(0) || delta > Rational(1)) throw BadParameter("delta must lie in (0, 1], got " + delta.str());
}

}  // namespace

Profile parse_profile(std::string_view name) {
  if (name == "uniform") return Profile::Uniform;
  if (name == "halves") return Profile::Halves;
  if (name == "mixed") return Profile::Mixed;
  throw BadParameter("unknown profile '" + std::string(name) + "'");
}

std::string_view to_string(Profile profile) {
  switch (profile) {
    case Profile::Uniform: return "uniform";
    case Profile::Halves: return "halves";
    case Profile::Mixed: return "mixed";
  }
  return "unknown";
}

Instance gen_random(std::size_t n, const Rational& delta, std::uint64_t seed, Profile profile, bool endpoints_only) {
  check_delta(delta);
  std::mt19937_64 rng(seed);
  std::vector<Rational> announced;
  announced.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (profile) {
      case Profile::Uniform:
        announced.emplace_back(draw(rng, 1, kSizeGrid), kSizeGrid);
        break;
      case Profile::Halves:
        announced.emplace_back(1, 2);
        break;
      case Profile::Mixed:
        switch (draw(rng, 0, 2)) {
          case 0: announced.emplace_back(draw(rng, 1, kSizeGrid / 4), kSizeGrid); break;
          case 1: announced.emplace_back(draw(rng, kSizeGrid / 3 + 1, kSizeGrid / 2), kSizeGrid); break;
          default: announced.emplace_back(draw(rng, kSizeGrid / 2 + 1, kSizeGrid), kSizeGrid); break;
        }
        break;
    }
  }
  return finish(delta, std::move(announced), rng, endpoints_only);
}

Instance gen_two_per_bin(std::size_t n, const Rational& delta, std::uint64_t seed, bool endpoints_only) {
  check_delta(delta);
  if (delta >= Rational(2, 3)) throw BadParameter("two-per-bin instances need delta < 2/3, got " + delta.str());
  const Rational threshold = Rational(1) / (Rational(3) * (Rational(1) - delta));
  const std::int64_t lowest = (threshold * Rational(kSizeGrid)).floor() + 1;
  if (lowest > kSizeGrid) throw BadParameter("no announced size above " + threshold.str() + " on the size grid");

  std::mt19937_64 rng(seed);
  std::vector<Rational> announced;
  announced.reserve(n);
  for (std::size_t i = 0; i < n; ++i) announced.emplace_back(draw(rng, lowest, kSizeGrid), kSizeGrid);
  return finish(delta, std::move(announced), rng, endpoints_only);
}

}  // namespace binestim
