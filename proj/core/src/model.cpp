#include "binestim/model.hpp"

#include "binestim/errors.hpp"

namespace binestim {

namespace {
bool in_unit_interval(const Rational& r) { return r > Rational(0) && r <= Rational(1); }
}  // namespace

Band band(const Rational& announced, const Rational& delta) {
  return Band{announced * (Rational(1) - delta), min(announced * (Rational(1) + delta), Rational(1))};
}

bool validate_actual(const Rational& announced, const Rational& delta, const Rational& actual) {
  return band(announced, delta).contains(actual);
}

Announcement::Announcement(Rational delta, std::vector<Rational> announced)
    : delta_(std::move(delta)), announced_(std::move(announced)) {
  if (!in_unit_interval(delta_)) throw BadParameter("delta must lie in (0, 1], got " + delta_.str());
  for (std::size_t i = 0; i < announced_.size(); ++i) {
    if (!in_unit_interval(announced_[i])) {
      throw BadParameter("announced size of item " + std::to_string(i) + " must lie in (0, 1], got " +
                         announced_[i].str());
    }
  }
}

}  // namespace binestim
