#pragma once

// Independent reference implementations used as oracles by the tests. They
// share nothing with the library beyond Rational.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "binestim/referee.hpp"

namespace testing_support {

using binestim::Rational;

// Smallest number of bins over all set partitions of `sizes`.
inline std::size_t brute_force_opt(std::span<const Rational> sizes) {
  const std::size_t n = sizes.size();
  if (n == 0) return 0;
  std::size_t best = n;
  std::vector<std::size_t> label(n, 0);
  // Walk every restricted-growth string label[0..n) (each a set partition).
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t blocks) {
    if (i == n) {
      std::vector<Rational> load(blocks);
      for (std::size_t j = 0; j < n; ++j) load[label[j]] += sizes[j];
      if (std::all_of(load.begin(), load.end(), [](const Rational& l) { return l <= Rational(1); })) {
        best = std::min(best, blocks);
      }
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      walk(i + 1, std::max(blocks, b + 1));
    }
  };
  walk(0, 0);
  return best;
}

// Maximum matching over all pairings of compatible items, by recursion on
// the first unmatched item. Bins = n - matched pairs.
inline std::size_t brute_force_pairing(std::span<const Rational> sizes) {
  std::vector<bool> used(sizes.size(), false);
  std::function<std::size_t(std::size_t)> best_pairs = [&](std::size_t i) -> std::size_t {
    while (i < sizes.size() && used[i]) ++i;
    if (i == sizes.size()) return 0;
    used[i] = true;
    std::size_t best = best_pairs(i + 1);  // i stays alone
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      if (!used[j] && sizes[i] + sizes[j] <= Rational(1)) {
        used[j] = true;
        best = std::max(best, 1 + best_pairs(i + 1));
        used[j] = false;
      }
    }
    used[i] = false;
    return best;
  };
  return sizes.size() - best_pairs(0);
}

// Plain-vector Best-Fit simulation: fullest bin that fits, lowest index on ties.
inline std::size_t simulate_best_fit(std::span<const Rational> sizes) {
  std::vector<Rational> loads;
  for (const auto& s : sizes) {
    std::optional<std::size_t> pick;
    for (std::size_t b = 0; b < loads.size(); ++b) {
      if (loads[b] + s <= Rational(1) && (!pick || loads[b] > loads[*pick])) pick = b;
    }
    if (pick) {
      loads[*pick] += s;
    } else {
      loads.push_back(s);
    }
  }
  return loads.size();
}

// Opens a fresh bin for every item.
class AlwaysNewBin final : public binestim::OnlineAlgorithm {
 public:
  std::string_view name() const override { return "always-new"; }
  void plan(const binestim::Announcement&) override {}
  std::size_t place(const binestim::PackingState& state, const binestim::Item&) override {
    return state.fresh_index();
  }
};

// Stacks greedily into the newest bin up to `per_bin` items, then opens another.
class FixedStack final : public binestim::OnlineAlgorithm {
 public:
  explicit FixedStack(std::size_t per_bin) : per_bin_(per_bin) {}
  std::string_view name() const override { return "fixed-stack"; }
  void plan(const binestim::Announcement&) override {}
  std::size_t place(const binestim::PackingState& state, const binestim::Item& item) override {
    if (state.bin_count() > 0) {
      const std::size_t last = state.bin_count() - 1;
      if (state.bin(last).items.size() < per_bin_ && state.fits(last, item.actual)) return last;
    }
    return state.fresh_index();
  }

 private:
  std::size_t per_bin_;
};

// Emits a fixed list of sizes against a fixed announcement.
class ScriptedAdversary final : public binestim::AdaptiveAdversary {
 public:
  ScriptedAdversary(binestim::Announcement ann, std::vector<Rational> sizes)
      : ann_(std::move(ann)), sizes_(std::move(sizes)) {}
  std::string_view name() const override { return "scripted"; }
  binestim::Announcement announce() override {
    next_ = 0;
    return ann_;
  }
  std::optional<Rational> next(const binestim::PackingState&) override {
    if (next_ == sizes_.size()) return std::nullopt;
    return sizes_[next_++];
  }
  void observe(const binestim::Item&, std::size_t, const binestim::PackingState&) override {}

 private:
  binestim::Announcement ann_;
  std::vector<Rational> sizes_;
  std::size_t next_ = 0;
};

inline std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> fractions) {
  std::vector<Rational> out;
  for (auto [p, q] : fractions) out.emplace_back(p, q);
  return out;
}

}  // namespace testing_support
