#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "binestim/model.hpp"
#include "binestim/rational.hpp"

namespace binestim {

struct Bin {
  std::vector<std::size_t> items;
  Rational load;

  friend bool operator==(const Bin&, const Bin&) = default;
};

/// The evolving packing. Bins are dense: a new bin is always opened at
/// index bin_count(). There is no removal operation.
class PackingState {
 public:
  /// Appends `item` to bin `bin_index`, opening it when bin_index == bin_count().
  /// Throws InvalidBin for indices past the first empty bin, CapacityExceeded
  /// when the load would exceed 1 and PreconditionViolated when items arrive
  /// out of id order.
  void place(std::size_t bin_index, const Item& item);

  std::span<const Bin> bins() const { return bins_; }
  const Bin& bin(std::size_t index) const { return bins_.at(index); }
  std::size_t bin_count() const { return bins_.size(); }
  std::size_t fresh_index() const { return bins_.size(); }

  bool fits(std::size_t bin_index, const Rational& size) const;

  /// Actual sizes of the revealed items, indexed by item id.
  std::span<const Rational> sizes() const { return sizes_; }
  std::size_t item_count() const { return sizes_.size(); }
  /// Bin holding item `id`.
  std::size_t bin_of(std::size_t id) const { return bin_of_.at(id); }

  friend bool operator==(const PackingState&, const PackingState&) = default;

 private:
  std::vector<Bin> bins_;
  std::vector<Rational> sizes_;
  std::vector<std::size_t> bin_of_;
};

}  // namespace binestim
