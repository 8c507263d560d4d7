#include "binestim/delayed_best_fit.hpp"

#include <string>

#include "binestim/algorithms.hpp"
#include "binestim/errors.hpp"

namespace binestim {

void DelayedBestFit::plan(const Announcement& announcement) {
  state_ = DbfState{};
  state_.n = announcement.size();
  state_.special_budget = announcement.size() / 3;
  large_bins_.clear();
}

std::size_t DelayedBestFit::place(const PackingState& packing, const Item& item) {
  const Rational half(1, 2);
  std::size_t bin = packing.fresh_index();
  bool special = false;

  if (item.actual <= half && state_.specials_used < state_.special_budget) {
    special = true;
    ++state_.specials_used;
    if (auto b = fullest_fitting(packing, large_bins_, item.actual)) bin = *b;
  } else {
    bin = baseline_place(BaselineStrategy::BestFit, packing, item);
  }

  if (bin == state_.contains_large.size()) {
    state_.contains_large.push_back(false);
    state_.contains_special.push_back(false);
  }
  if (item.actual > half && !state_.contains_large[bin]) {
    state_.contains_large[bin] = true;
    large_bins_.push_back(bin);
  }
  if (special) state_.contains_special[bin] = true;
  return bin;
}

Counters DelayedBestFit::counters() const {
  return Counters{{"special_budget", static_cast<std::int64_t>(state_.special_budget)},
                  {"specials_used", static_cast<std::int64_t>(state_.specials_used)}};
}

std::vector<bool> dbf_special_items(const Transcript& t) {
  const std::size_t budget = t.announcement.size() / 3;
  std::vector<bool> special(t.steps.size(), false);
  std::size_t used = 0;
  for (std::size_t i = 0; i < t.steps.size() && used < budget; ++i) {
    if (t.steps[i].item.actual <= Rational(1, 2)) {
      special[i] = true;
      ++used;
    }
  }
  return special;
}

std::vector<DbfBinType> dbf_bin_types(const Transcript& t) {
  const auto special = dbf_special_items(t);
  const auto sizes = t.final_state.sizes();
  const Rational half(1, 2);
  std::vector<DbfBinType> types;

  for (std::size_t b = 0; b < t.final_state.bin_count(); ++b) {
    std::size_t large = 0, specials = 0, regular = 0;
    for (std::size_t id : t.final_state.bin(b).items) {
      if (sizes[id] > half) {
        ++large;
      } else if (special[id]) {
        ++specials;
      } else {
        ++regular;
      }
    }
    const std::size_t total = large + specials + regular;
    if (large == 1 && total == 1) {
      types.push_back(DbfBinType::X);
    } else if (large == 1 && regular == 1 && total == 2) {
      types.push_back(DbfBinType::X2);
    } else if (large == 1 && specials == 1 && total == 2) {
      types.push_back(DbfBinType::Xs);
    } else if (specials == 1 && total == 1) {
      types.push_back(DbfBinType::Y);
    } else if (specials == 1 && regular == 1 && total == 2) {
      types.push_back(DbfBinType::Y2);
    } else if (large == 0 && specials == 0 && regular >= 1) {
      types.push_back(DbfBinType::Z);
    } else {
      throw UnclassifiableBin("bin " + std::to_string(b) + " holds " + std::to_string(large) + " large, " +
                              std::to_string(specials) + " special and " + std::to_string(regular) +
                              " regular items");
    }
  }
  return types;
}

BinTypeCounts dbf_classify_bins(const Transcript& t) {
  BinTypeCounts c;
  for (DbfBinType type : dbf_bin_types(t)) {
    switch (type) {
      case DbfBinType::X: ++c.x; break;
      case DbfBinType::X2: ++c.x2; break;
      case DbfBinType::Xs: ++c.xs; break;
      case DbfBinType::Y: ++c.y; break;
      case DbfBinType::Y2: ++c.y2; break;
      case DbfBinType::Z: ++c.z; break;
    }
  }
  for (const auto& s : t.final_state.sizes()) {
    if (s > Rational(1, 2)) ++c.n1;
  }
  return c;
}

}  // namespace binestim
