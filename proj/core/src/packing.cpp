#include "binestim/packing.hpp"

#include <string>

#include "binestim/errors.hpp"

namespace binestim {

bool PackingState::fits(std::size_t bin_index, const Rational& size) const {
  if (bin_index >= bins_.size()) return size <= Rational(1);
  return bins_[bin_index].load + size <= Rational(1);
}

void PackingState::place(std::size_t bin_index, const Item& item) {
  if (item.id != sizes_.size()) {
    throw PreconditionViolated("item " + std::to_string(item.id) + " revealed out of order; expected " +
                               std::to_string(sizes_.size()));
  }
  if (bin_index > bins_.size()) {
    throw InvalidBin("bin " + std::to_string(bin_index) + " skips past the first empty bin " +
                     std::to_string(bins_.size()));
  }
  if (!fits(bin_index, item.actual)) {
    throw CapacityExceeded("item " + std::to_string(item.id) + " of size " + item.actual.str() +
                           " does not fit into bin " + std::to_string(bin_index));
  }
  if (bin_index == bins_.size()) bins_.emplace_back();
  Bin& target = bins_[bin_index];
  target.items.push_back(item.id);
  target.load += item.actual;
  sizes_.push_back(item.actual);
  bin_of_.push_back(bin_index);
}

}  // namespace binestim
