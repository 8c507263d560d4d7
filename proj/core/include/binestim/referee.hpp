#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binestim/model.hpp"
#include "binestim/packing.hpp"

namespace binestim {

/// Named integer counters that algorithms and adversaries expose for
/// inspection. The referee never interprets them.
using Counters = std::map<std::string, std::int64_t>;

/// A packing strategy. plan() is called once per game, before any item is
/// revealed, and must reset all per-game state. place() returns the index of
/// the bin the item goes into; bin_count() means "open a new bin".
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual std::string_view name() const = 0;
  virtual void plan(const Announcement& announcement) = 0;
  virtual std::size_t place(const PackingState& state, const Item& item) = 0;
  virtual Counters counters() const { return {}; }
};

/// An adversary that picks each actual size after seeing the previous
/// placements. announce() commits to the estimates before the game starts.
class AdaptiveAdversary {
 public:
  virtual ~AdaptiveAdversary() = default;

  virtual std::string_view name() const = 0;
  virtual Announcement announce() = 0;
  /// Actual size of the next item, or nullopt to end the instance.
  virtual std::optional<Rational> next(const PackingState& state) = 0;
  virtual void observe(const Item& item, std::size_t bin, const PackingState& state) = 0;
  virtual Counters counters() const { return {}; }
};

struct Placement {
  Item item;
  std::size_t bin = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

/// Full record of one game. Adversary counters carry an "adversary." prefix.
struct Transcript {
  std::string algorithm;
  Announcement announcement;
  std::vector<Placement> steps;
  PackingState final_state;
  Counters counters;
  std::vector<Counters> step_counters;

  std::vector<Rational> actual_sizes() const;
  std::vector<std::size_t> placements() const;
  std::size_t bins_used() const { return final_state.bin_count(); }
  Instance instance() const { return Instance{announcement, actual_sizes()}; }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Drives `algorithm` over a fixed instance. Throws AdversaryDishonest when
/// an actual size leaves its band or the counts differ; CapacityExceeded and
/// InvalidBin from the algorithm propagate.
Transcript run_game(OnlineAlgorithm& algorithm, const Announcement& announcement,
                    std::span<const Rational> actual);
Transcript run_game(OnlineAlgorithm& algorithm, const Instance& instance);

/// Drives `algorithm` against an adaptive adversary. The announced item count
/// is binding: ending early throws AdversaryDishonest.
Transcript run_adaptive_game(OnlineAlgorithm& algorithm, AdaptiveAdversary& adversary);

/// Re-runs the transcript's recorded instance through `algorithm`.
Transcript replay(OnlineAlgorithm& algorithm, const Transcript& transcript);

/// Checks load conservation and feasibility of the final packing and that it
/// matches the recorded placements. Throws PreconditionViolated otherwise.
void check_transcript(const Transcript& transcript);

}  // namespace binestim
