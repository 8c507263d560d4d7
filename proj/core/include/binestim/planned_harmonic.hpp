#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "binestim/algorithms.hpp"
#include "binestim/model.hpp"
#include "binestim/referee.hpp"

namespace binestim {

/// Output of the planning phase. All sets hold item ids.
///
/// - guaranteed_large: (1 - delta) c' > 1/2
/// - possible_large:   (1 + delta) c' > 1/2, not guaranteed
/// - small_pool:       (1 - delta) c' <= 1/4, excluding possible_large
///
/// companions[i] belongs to guaranteed_large[i] and satisfies
/// (1 + delta)(c'(a) + sum c'(S)) <= 1. designated[i] is the small set of
/// reserved bin B_{i+1} and satisfies (1 + delta)(1/(2(1 - delta)) + sum c'(S)) <= 1.
struct PhPlan {
  std::vector<std::size_t> guaranteed_large;
  std::vector<std::size_t> possible_large;
  std::vector<std::size_t> small_pool;
  std::vector<std::vector<std::size_t>> companions;
  std::vector<std::vector<std::size_t>> designated;

  /// Number of reserved bins (k).
  std::size_t reserved_count() const { return designated.size(); }
};

/// Each maximal set is built by one scan over the remaining pool in
/// descending announced size (ties by id), keeping every item that still fits.
PhPlan ph_plan(const Announcement& announcement);

/// Planned-Harmonic. Exposes counters l (reserved bins holding a possibly
/// large item), k, m (possibly large items not yet revealed at the last
/// recount), unfilled_large and reserved_small_placements.
class PlannedHarmonic final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "ph"; }
  void plan(const Announcement& announcement) override;
  std::size_t place(const PackingState& state, const Item& item) override;
  Counters counters() const override;

  const PhPlan& current_plan() const { return plan_; }
  /// Physical bin of each reserved bin B_1..B_k; nullopt while unopened.
  std::vector<std::optional<std::size_t>> reserved_bins() const;
  /// True when every item of actual size > 1/2 shares its bin with a
  /// nonempty planned set of small items.
  bool all_large_filled() const { return unfilled_large_ == 0; }

 private:
  struct Slot {
    std::optional<std::size_t> bin;
    bool has_smalls = false;
  };

  std::size_t place_in_slot(const PackingState& state, std::size_t slot, const Item& item);
  std::size_t take_reserved(const PackingState& state, const Item& item);

  PhPlan plan_;
  std::vector<Slot> slots_;  // companion slots, then reserved slots
  std::vector<std::optional<std::size_t>> slot_of_item_;
  std::vector<bool> possible_large_;
  std::size_t l_ = 0;
  std::size_t m_ = 0;
  std::size_t unrevealed_possible_ = 0;
  std::size_t unfilled_large_ = 0;
  std::size_t reserved_small_placements_ = 0;
  Harmonic4Packer harmonic_;
};

}  // namespace binestim
