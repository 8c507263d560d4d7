#include "binestim/algorithms.hpp"

#include <array>

#include "binestim/delayed_best_fit.hpp"
#include "binestim/errors.hpp"
#include "binestim/planned_harmonic.hpp"

namespace binestim {

HarmonicClass classify_harmonic(const Rational& size) {
  for (int k = 1; k <= 3; ++k) {
    if (size > Rational(1, k + 1)) return HarmonicClass{k};
  }
  return HarmonicClass{4};
}

std::optional<std::size_t> fullest_fitting(const PackingState& state, std::span<const std::size_t> candidates,
                                           const Rational& size) {
  std::optional<std::size_t> best;
  for (std::size_t b : candidates) {
    if (!state.fits(b, size)) continue;
    if (!best || state.bin(b).load > state.bin(*best).load || (state.bin(b).load == state.bin(*best).load && b < *best)) {
      best = b;
    }
  }
  return best;
}

std::size_t baseline_place(BaselineStrategy strategy, const PackingState& state, const Item& item) {
  const std::size_t fresh = state.fresh_index();
  switch (strategy) {
    case BaselineStrategy::NextFit:
      if (fresh > 0 && state.fits(fresh - 1, item.actual)) return fresh - 1;
      return fresh;
    case BaselineStrategy::FirstFit:
      for (std::size_t b = 0; b < fresh; ++b) {
        if (state.fits(b, item.actual)) return b;
      }
      return fresh;
    case BaselineStrategy::BestFit: {
      std::optional<std::size_t> best;
      for (std::size_t b = 0; b < fresh; ++b) {
        if (state.fits(b, item.actual) && (!best || state.bin(b).load > state.bin(*best).load)) best = b;
      }
      return best.value_or(fresh);
    }
  }
  return fresh;
}

std::string_view BaselineAlgorithm::name() const {
  switch (strategy_) {
    case BaselineStrategy::NextFit: return "nextfit";
    case BaselineStrategy::FirstFit: return "firstfit";
    case BaselineStrategy::BestFit: return "bestfit";
  }
  return "baseline";
}

std::size_t Harmonic4Packer::place(const PackingState& state, const Item& item) {
  const int k = classify_harmonic(item.actual).k;
  if (k == 1) return state.fresh_index();
  auto& open = open_[static_cast<std::size_t>(k)];
  if (open && state.fits(*open, item.actual)) return *open;
  open = state.fresh_index();
  return *open;
}

namespace {
constexpr std::array<std::string_view, 6> kNames = {"nextfit", "firstfit", "bestfit", "harmonic4", "ph", "dbf"};
}

std::span<const std::string_view> algorithm_names() { return kNames; }

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name) {
  if (name == "nextfit") return std::make_unique<BaselineAlgorithm>(BaselineStrategy::NextFit);
  if (name == "firstfit") return std::make_unique<BaselineAlgorithm>(BaselineStrategy::FirstFit);
  if (name == "bestfit") return std::make_unique<BaselineAlgorithm>(BaselineStrategy::BestFit);
  if (name == "harmonic4") return std::make_unique<Harmonic4>();
  if (name == "ph") return std::make_unique<PlannedHarmonic>();
  if (name == "dbf") return std::make_unique<DelayedBestFit>();
  throw BadParameter("unknown algorithm '" + std::string(name) + "'");
}

}  // namespace binestim
