#pragma once

#include <cstddef>
#include <vector>

#include "binestim/referee.hpp"

namespace binestim {

struct DbfState {
  std::size_t n = 0;
  std::size_t special_budget = 0;  // floor(n / 3)
  std::size_t specials_used = 0;
  std::vector<bool> contains_large;
  std::vector<bool> contains_special;
};

/// Delayed-Best-Fit. The first floor(n/3) items of size <= 1/2 are special:
/// each goes to the fullest bin holding an item > 1/2 that fits it (lowest
/// index on ties), else to an empty bin. Everything else is Best-Fit.
class DelayedBestFit final : public OnlineAlgorithm {
 public:
  std::string_view name() const override { return "dbf"; }
  void plan(const Announcement& announcement) override;
  std::size_t place(const PackingState& state, const Item& item) override;
  Counters counters() const override;

  const DbfState& state() const { return state_; }

 private:
  DbfState state_;
  std::vector<std::size_t> large_bins_;
};

/// Bin configurations of a Delayed-Best-Fit packing. Items > 1/2 are large;
/// special items are recomputed from the transcript; other items are regular.
///
///   X  large alone            Y   special alone
///   X2 large + regular        Y2  special + regular
///   Xs large + special        Z   regular items only
struct BinTypeCounts {
  std::size_t x = 0, x2 = 0, xs = 0, y = 0, y2 = 0, z = 0;
  std::size_t n1 = 0;

  std::size_t y_prime() const { return y + y2; }
  std::size_t total() const { return x + x2 + xs + y + y2 + z; }
  friend bool operator==(const BinTypeCounts&, const BinTypeCounts&) = default;
};

enum class DbfBinType { X, X2, Xs, Y, Y2, Z };

/// Flags the special items of a transcript: the first floor(n/3) revealed
/// items with actual size <= 1/2.
std::vector<bool> dbf_special_items(const Transcript& transcript);

/// Type of every bin in the final packing. Throws UnclassifiableBin when a
/// bin fits none of the six configurations.
std::vector<DbfBinType> dbf_bin_types(const Transcript& transcript);
BinTypeCounts dbf_classify_bins(const Transcript& transcript);

}  // namespace binestim
