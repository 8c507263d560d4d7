#include <algorithm>
#include <string>

#include "binestim/adversary.hpp"
#include "binestim/errors.hpp"

namespace binestim {
namespace {

Rational power(std::int64_t base, std::size_t exponent) {
  Rational out(1);
  for (std::size_t e = 0; e < exponent; ++e) out *= Rational(base);
  return out;
}

struct Candidate {
  Rational size;
  bool from_formula = true;
};

Candidate next_phase1(const FourThirdsState& s, FourThirdsSchedule schedule) {
  const Rational half(1, 2);
  const Rational band_low = half * (Rational(1) - s.delta);
  const Rational& hi = s.min_laid_out ? *s.min_laid_out : half;

  if (schedule == FourThirdsSchedule::Formula) {
    const auto n = static_cast<std::int64_t>(s.n);
    const Rational step = Rational(static_cast<std::int64_t>(s.k)) * s.delta / (Rational(2) * power(n, s.i));
    const Rational base = s.i == 1 ? half : s.epoch_reference.value_or(half);
    Rational v = base - step;
    // Strictly above the band floor: an item sitting on the floor would leave
    // no room for a later stacked item below every laid-out one.
    if (v > band_low && v < hi && (!s.max_stacked || v > *s.max_stacked)) return Candidate{std::move(v), true};
  }

  const Rational low = s.max_stacked ? max(*s.max_stacked, band_low) : band_low;
  if (!(low < hi)) throw ConstructionFailure("no room left between stacked and laid-out sizes");
  return Candidate{(low + hi) / Rational(2), false};
}

}  // namespace

Rational FourThirdsState::p() const {
  return Rational(static_cast<std::int64_t>(bins_after_phase1), static_cast<std::int64_t>(n));
}

Announcement four_thirds_announce(std::size_t n, const Rational& delta) {
  if (n == 0 || n % 3 != 0) throw BadParameter("fourthirds needs n divisible by 3, got " + std::to_string(n));
  return Announcement(delta, std::vector<Rational>(2 * n, Rational(1, 2)));
}

Rational four_thirds_next(const FourThirdsState& state, FourThirdsSchedule schedule) {
  return next_phase1(state, schedule).size;
}

std::vector<Rational> four_thirds_phase2(const FourThirdsState& s) {
  if (s.sizes.size() != s.phase1_length()) throw PreconditionViolated("phase 1 is not complete");
  const std::size_t remaining = 2 * s.n - s.phase1_length();
  const std::size_t large = std::min(s.t, remaining);
  std::vector<Rational> out;
  out.reserve(remaining);
  if (large > 0) {
    // s + max stacked <= 1 and s + min laid-out > 1.
    const Rational lower = Rational(1) - *s.min_laid_out;
    const Rational upper = Rational(1) - *s.max_stacked;
    if (!(lower < upper)) {
      throw ConstructionFailure("largest stacked item " + s.max_stacked->str() + " is not below smallest laid-out " +
                                s.min_laid_out->str());
    }
    const Rational size = (lower + upper) / Rational(2);
    if (!validate_actual(Rational(1, 2), s.delta, size)) {
      throw ConstructionFailure("phase-2 size " + size.str() + " leaves the band");
    }
    out.assign(large, size);
  }
  out.resize(remaining, Rational(1, 2));
  return out;
}

FourThirdsAdversary::FourThirdsAdversary(std::size_t n, Rational delta, FourThirdsSchedule schedule)
    : schedule_(schedule) {
  four_thirds_announce(n, delta);  // validates
  state_.n = n;
  state_.delta = std::move(delta);
}

Announcement FourThirdsAdversary::announce() {
  FourThirdsState fresh;
  fresh.n = state_.n;
  fresh.delta = state_.delta;
  state_ = std::move(fresh);
  phase2_.clear();
  return four_thirds_announce(state_.n, state_.delta);
}

std::optional<Rational> FourThirdsAdversary::next(const PackingState& packing) {
  const std::size_t emitted = state_.sizes.size();
  if (emitted >= 2 * state_.n) return std::nullopt;
  if (emitted < state_.phase1_length()) {
    Candidate c = next_phase1(state_, schedule_);
    if (schedule_ == FourThirdsSchedule::Formula && !c.from_formula) ++state_.formula_fallbacks;
    state_.sizes.push_back(c.size);
    return c.size;
  }
  if (state_.phase == 1) {
    state_.phase = 2;
    state_.bins_after_phase1 = packing.bin_count();
    phase2_ = four_thirds_phase2(state_);
  }
  state_.sizes.push_back(phase2_[emitted - state_.phase1_length()]);
  return state_.sizes.back();
}

void FourThirdsAdversary::observe(const Item& item, std::size_t bin, const PackingState& packing) {
  if (item.id >= state_.phase1_length()) return;
  const bool stacked = packing.bin(bin).items.size() > 1;
  state_.stacked.push_back(stacked);
  if (stacked) {
    ++state_.t;
    state_.max_stacked = state_.max_stacked ? max(*state_.max_stacked, item.actual) : item.actual;
    state_.epoch_reference = state_.last_laid_out;
    ++state_.i;
    state_.k = 1;
  } else {
    state_.last_laid_out = item.actual;
    state_.min_laid_out = state_.min_laid_out ? min(*state_.min_laid_out, item.actual) : item.actual;
    ++state_.k;
  }
}

Counters FourThirdsAdversary::counters() const {
  return Counters{{"i", static_cast<std::int64_t>(state_.i)},
                  {"k", static_cast<std::int64_t>(state_.k)},
                  {"t", static_cast<std::int64_t>(state_.t)},
                  {"phase", state_.phase},
                  {"bins_after_phase1", static_cast<std::int64_t>(state_.bins_after_phase1)},
                  {"formula_fallbacks", static_cast<std::int64_t>(state_.formula_fallbacks)}};
}

std::vector<bool> four_thirds_stacked_items(const Transcript& t) {
  const std::size_t phase1 = 4 * (t.announcement.size() / 2) / 3;
  std::vector<bool> stacked(std::min(phase1, t.steps.size()), false);
  for (std::size_t id = 0; id < stacked.size(); ++id) {
    stacked[id] = t.final_state.bin(t.final_state.bin_of(id)).items.front() != id;
  }
  return stacked;
}

OptResult four_thirds_certificate(const Transcript& t) {
  const std::size_t n = t.announcement.size() / 2;
  if (t.steps.size() != 2 * n || n % 3 != 0) throw CertificateInfeasible("not a completed fourthirds game");
  const auto sizes = t.final_state.sizes();
  const auto stacked = four_thirds_stacked_items(t);

  std::vector<std::size_t> stacked_ids, large_ids, rest;
  std::vector<bool> used(sizes.size(), false);
  for (std::size_t id = 0; id < stacked.size(); ++id) {
    if (stacked[id]) stacked_ids.push_back(id);
  }
  for (std::size_t id = stacked.size(); id < sizes.size(); ++id) {
    if (sizes[id] > Rational(1, 2)) large_ids.push_back(id);
  }
  if (large_ids.size() > stacked_ids.size()) {
    throw CertificateInfeasible("more large phase-2 items than stacked phase-1 items");
  }

  OptResult r;
  r.exact = true;
  for (std::size_t j = 0; j < large_ids.size(); ++j) {
    r.certificate.push_back({stacked_ids[j], large_ids[j]});
    used[stacked_ids[j]] = used[large_ids[j]] = true;
  }
  for (std::size_t id = 0; id < sizes.size(); ++id) {
    if (!used[id]) rest.push_back(id);
  }
  for (std::size_t j = 0; j + 1 < rest.size(); j += 2) r.certificate.push_back({rest[j], rest[j + 1]});
  if (rest.size() % 2 == 1) r.certificate.push_back({rest.back()});
  r.bins = r.certificate.size();
  verify_certificate(sizes, r);
  if (r.bins != n) throw CertificateInfeasible("certificate uses " + std::to_string(r.bins) + " bins, expected n");
  return r;
}

}  // namespace binestim
