#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "binestim/rational.hpp"

namespace binestim {

/// Closed interval of legal actual sizes for one announced size.
struct Band {
  Rational lower;
  Rational upper;

  bool contains(const Rational& size) const { return lower <= size && size <= upper; }
};

/// [announced(1 - delta), min(announced(1 + delta), 1)].
Band band(const Rational& announced, const Rational& delta);

/// True iff `actual` lies in the closed band of `announced` under `delta`.
bool validate_actual(const Rational& announced, const Rational& delta, const Rational& actual);

/// Information the algorithm receives before the first item: the accuracy
/// and one estimated size per item. Immutable after construction.
class Announcement {
 public:
  Announcement() : delta_(1) {}
  /// Throws BadParameter unless delta and every size lie in (0, 1].
  Announcement(Rational delta, std::vector<Rational> announced);

  const Rational& delta() const { return delta_; }
  std::span<const Rational> sizes() const { return announced_; }
  const Rational& operator[](std::size_t id) const { return announced_.at(id); }
  std::size_t size() const { return announced_.size(); }
  bool empty() const { return announced_.empty(); }
  Band band_of(std::size_t id) const { return band(announced_.at(id), delta_); }

  friend bool operator==(const Announcement&, const Announcement&) = default;

 private:
  Rational delta_;
  std::vector<Rational> announced_;
};

/// A revealed item. `id` indexes the announcement; items are revealed in id order.
struct Item {
  std::size_t id = 0;
  Rational announced;
  Rational actual;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Announcement plus the actual sizes that will be revealed. `actual` is
/// empty for instances driven by an adaptive adversary.
struct Instance {
  Announcement announcement;
  std::vector<Rational> actual;

  bool has_actual() const { return !actual.empty() || announcement.empty(); }
};

}  // namespace binestim
