#include "binestim/referee.hpp"

#include <string>

#include "binestim/errors.hpp"

namespace binestim {
namespace {

void step(OnlineAlgorithm& algorithm, Transcript& t, const Item& item) {
  const std::size_t bin = algorithm.place(t.final_state, item);
  t.final_state.place(bin, item);
  t.steps.push_back(Placement{item, bin});
  t.step_counters.push_back(algorithm.counters());
}

}  // namespace

std::vector<Rational> Transcript::actual_sizes() const {
  std::vector<Rational> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.item.actual);
  return out;
}

std::vector<std::size_t> Transcript::placements() const {
  std::vector<std::size_t> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.bin);
  return out;
}

Transcript run_game(OnlineAlgorithm& algorithm, const Announcement& announcement,
                    std::span<const Rational> actual) {
  if (actual.size() != announcement.size()) {
    throw AdversaryDishonest("instance announces " + std::to_string(announcement.size()) + " items but reveals " +
                             std::to_string(actual.size()));
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!validate_actual(announcement[i], announcement.delta(), actual[i])) {
      throw AdversaryDishonest("actual size " + actual[i].str() + " of item " + std::to_string(i) +
                               " lies outside the band of announced size " + announcement[i].str());
    }
  }

  Transcript t;
  t.algorithm = std::string(algorithm.name());
  t.announcement = announcement;
  algorithm.plan(announcement);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    step(algorithm, t, Item{i, announcement[i], actual[i]});
  }
  t.counters = algorithm.counters();
  return t;
}

Transcript run_game(OnlineAlgorithm& algorithm, const Instance& instance) {
  return run_game(algorithm, instance.announcement, instance.actual);
}

Transcript run_adaptive_game(OnlineAlgorithm& algorithm, AdaptiveAdversary& adversary) {
  Transcript t;
  t.algorithm = std::string(algorithm.name());
  t.announcement = adversary.announce();
  const Announcement& announcement = t.announcement;
  algorithm.plan(announcement);

  for (std::size_t i = 0; i < announcement.size(); ++i) {
    std::optional<Rational> size = adversary.next(t.final_state);
    if (!size) {
      throw AdversaryDishonest(std::string(adversary.name()) + " ended the instance after " + std::to_string(i) +
                               " of " + std::to_string(announcement.size()) + " announced items");
    }
    if (!validate_actual(announcement[i], announcement.delta(), *size)) {
      throw AdversaryDishonest(std::string(adversary.name()) + " emitted " + size->str() + " for item " +
                               std::to_string(i) + " outside the band of " + announcement[i].str());
    }
    Item item{i, announcement[i], std::move(*size)};
    step(algorithm, t, item);
    adversary.observe(item, t.steps.back().bin, t.final_state);
  }

  t.counters = algorithm.counters();
  for (const auto& [key, value] : adversary.counters()) t.counters["adversary." + key] = value;
  return t;
}

Transcript replay(OnlineAlgorithm& algorithm, const Transcript& transcript) {
  return run_game(algorithm, transcript.announcement, transcript.actual_sizes());
}

void check_transcript(const Transcript& t) {
  PackingState rebuilt;
  for (const auto& s : t.steps) rebuilt.place(s.bin, s.item);
  if (!(rebuilt == t.final_state)) throw PreconditionViolated("final state does not match recorded placements");

  Rational loads;
  for (const auto& bin : t.final_state.bins()) {
    if (bin.load > Rational(1)) throw PreconditionViolated("bin load exceeds 1");
    Rational items;
    for (std::size_t id : bin.items) items += t.final_state.sizes()[id];
    if (items != bin.load) throw PreconditionViolated("bin load differs from the sum of its items");
    loads += bin.load;
  }
  const auto actual = t.actual_sizes();
  if (loads != sum(actual)) throw PreconditionViolated("sum of loads differs from sum of actual sizes");
}

}  // namespace binestim
