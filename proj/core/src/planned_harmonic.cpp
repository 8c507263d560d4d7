#include "binestim/planned_harmonic.hpp"

#include <algorithm>
#include <string>

#include "binestim/errors.hpp"

namespace binestim {
namespace {

/// Removes from `pool` a maximal set whose announced sizes sum to at most `budget`.
std::vector<std::size_t> extract_maximal(std::vector<std::size_t>& pool, const Announcement& ann, Rational budget) {
  std::vector<std::size_t> taken;
  std::vector<std::size_t> rest;
  for (std::size_t id : pool) {
    if (ann[id] <= budget) {
      budget -= ann[id];
      taken.push_back(id);
    } else {
      rest.push_back(id);
    }
  }
  pool = std::move(rest);
  return taken;
}

}  // namespace

PhPlan ph_plan(const Announcement& ann) {
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  const Rational lo = Rational(1) - ann.delta();
  const Rational hi = Rational(1) + ann.delta();

  PhPlan plan;
  for (std::size_t id = 0; id < ann.size(); ++id) {
    if (lo * ann[id] > half) {
      plan.guaranteed_large.push_back(id);
    } else if (hi * ann[id] > half) {
      plan.possible_large.push_back(id);
    } else if (lo * ann[id] <= quarter) {
      plan.small_pool.push_back(id);
    }
  }

  std::vector<std::size_t> pool = plan.small_pool;
  std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) { return ann[a] > ann[b]; });

  const Rational capacity = Rational(1) / hi;
  for (std::size_t id : plan.guaranteed_large) {
    plan.companions.push_back(extract_maximal(pool, ann, capacity - ann[id]));
  }

  const Rational reserved_base = Rational(1) / (Rational(2) * lo);
  for (std::size_t i = 0; i < plan.possible_large.size(); ++i) {
    if (pool.empty()) break;
    plan.designated.push_back(extract_maximal(pool, ann, capacity - reserved_base));
  }
  return plan;
}

void PlannedHarmonic::plan(const Announcement& announcement) {
  plan_ = ph_plan(announcement);
  slots_.clear();
  slot_of_item_.assign(announcement.size(), std::nullopt);
  possible_large_.assign(announcement.size(), false);

  for (std::size_t i = 0; i < plan_.guaranteed_large.size(); ++i) {
    const std::size_t slot = slots_.size();
    slots_.push_back(Slot{std::nullopt, !plan_.companions[i].empty()});
    slot_of_item_[plan_.guaranteed_large[i]] = slot;
    for (std::size_t id : plan_.companions[i]) slot_of_item_[id] = slot;
  }
  for (const auto& set : plan_.designated) {
    const std::size_t slot = slots_.size();
    slots_.push_back(Slot{std::nullopt, !set.empty()});
    for (std::size_t id : set) slot_of_item_[id] = slot;
  }
  for (std::size_t id : plan_.possible_large) possible_large_[id] = true;

  l_ = 0;
  m_ = plan_.possible_large.size();
  unrevealed_possible_ = plan_.possible_large.size();
  unfilled_large_ = 0;
  reserved_small_placements_ = 0;
  harmonic_.reset();
}

std::size_t PlannedHarmonic::place_in_slot(const PackingState& state, std::size_t slot, const Item& item) {
  Slot& s = slots_[slot];
  if (!s.bin) {
    s.bin = state.fresh_index();
    return *s.bin;
  }
  if (!state.fits(*s.bin, item.actual)) {
    throw PlanViolation("planned item " + std::to_string(item.id) + " of size " + item.actual.str() +
                        " does not fit into its planned bin " + std::to_string(*s.bin));
  }
  return *s.bin;
}

std::size_t PlannedHarmonic::take_reserved(const PackingState& state, const Item& item) {
  const std::size_t slot = plan_.guaranteed_large.size() + l_;
  ++l_;
  if (item.actual > Rational(1, 2) && !slots_[slot].has_smalls) ++unfilled_large_;
  return place_in_slot(state, slot, item);
}

std::size_t PlannedHarmonic::place(const PackingState& state, const Item& item) {
  const Rational half(1, 2);
  const std::size_t k = plan_.reserved_count();

  if (possible_large_.at(item.id)) {
    --unrevealed_possible_;
    if (item.actual > half) {
      if (l_ < k) return take_reserved(state, item);
      ++unfilled_large_;
      return state.fresh_index();
    }
    if (item.actual > Rational(1, 3)) {
      m_ = unrevealed_possible_;
      if (m_ >= k - l_) return harmonic_.place(state, item);
      ++reserved_small_placements_;
      return take_reserved(state, item);
    }
    // Possible-large items at or below 1/3 only occur for delta > 1/5 and carry no plan.
    return harmonic_.place(state, item);
  }

  if (const auto slot = slot_of_item_.at(item.id)) {
    if (item.actual > half && !slots_[*slot].has_smalls) ++unfilled_large_;
    return place_in_slot(state, *slot, item);
  }
  return harmonic_.place(state, item);
}

Counters PlannedHarmonic::counters() const {
  return Counters{{"k", static_cast<std::int64_t>(plan_.reserved_count())},
                  {"l", static_cast<std::int64_t>(l_)},
                  {"m", static_cast<std::int64_t>(m_)},
                  {"reserved_small_placements", static_cast<std::int64_t>(reserved_small_placements_)},
                  {"unfilled_large", static_cast<std::int64_t>(unfilled_large_)}};
}

std::vector<std::optional<std::size_t>> PlannedHarmonic::reserved_bins() const {
  std::vector<std::optional<std::size_t>> out;
  for (std::size_t i = plan_.guaranteed_large.size(); i < slots_.size(); ++i) out.push_back(slots_[i].bin);
  return out;
}

}  // namespace binestim
