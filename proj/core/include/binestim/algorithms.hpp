#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "binestim/packing.hpp"
#include "binestim/referee.hpp"

namespace binestim {

/// Harmonic size class: k in {1,2,3} for sizes in (1/(k+1), 1/k], 4 for sizes <= 1/4.
struct HarmonicClass {
  int k = 4;

  friend bool operator==(HarmonicClass, HarmonicClass) = default;
};

HarmonicClass classify_harmonic(const Rational& size);

enum class BaselineStrategy { NextFit, FirstFit, BestFit };

/// Bin chosen by a classical strategy. Best-Fit breaks ties by lowest index.
std::size_t baseline_place(BaselineStrategy strategy, const PackingState& state, const Item& item);

/// Fullest bin among `candidates` that still fits `size`, lowest index on ties.
std::optional<std::size_t> fullest_fitting(const PackingState& state, std::span<const std::size_t> candidates,
                                           const Rational& size);

class BaselineAlgorithm final : public OnlineAlgorithm {
 public:
  explicit BaselineAlgorithm(BaselineStrategy strategy) : strategy_(strategy) {}

  std::string_view name() const override;
  void plan(const Announcement&) override {}
  std::size_t place(const PackingState& state, const Item& item) override {
    return baseline_place(strategy_, state, item);
  }

 private:
  BaselineStrategy strategy_;
};

/// Class-segregated greedy packing over its own bins. Used standalone and as
/// the fallback inside Planned-Harmonic, where other bins share the state.
class Harmonic4Packer {
 public:
  void reset() { open_.fill(std::nullopt); }
  /// Chooses a bin for `item` and records it as the class's open bin.
  std::size_t place(const PackingState& state, const Item& item);

 private:
  // Open bin per class 2..4 (index 0 unused for class 1).
  std::array<std::optional<std::size_t>, 5> open_{};
};

class Harmonic4 final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "harmonic4"; }
  void plan(const Announcement&) override { packer_.reset(); }
  std::size_t place(const PackingState& state, const Item& item) override { return packer_.place(state, item); }

 private:
  Harmonic4Packer packer_;
};

/// Registry: nextfit, firstfit, bestfit, harmonic4, ph, dbf.
std::span<const std::string_view> algorithm_names();
/// Throws BadParameter for unknown names.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view name);

}  // namespace binestim
