#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "binestim/oracle.hpp"
#include "binestim/referee.hpp"

namespace binestim {

// ---------------------------------------------------------------------------
// 4/3 construction: 2n items announced at 1/2.
//
// Phase 1 emits 4n/3 items slightly below 1/2. An item is stacked when the
// algorithm puts it into a nonempty bin and laid out otherwise. Sizes are
// chosen so every stacked item is strictly smaller than every laid-out one.
// Phase 2 emits t items just above 1/2 that fit only next to a stacked item
// (t = number of stacked items), then fills up with items of exactly 1/2.
// ---------------------------------------------------------------------------

enum class FourThirdsSchedule {
  /// c(x_{1,k}) = 1/2 - k delta / (2n) and
  /// c(x_{i,k}) = c(R_i) - k delta / (2 n^i), where R_i is the last laid-out
  /// item before the i-th epoch began. When the formula would leave the band
  /// or break the ordering (k >= n), the item falls back to the midpoint rule.
  Formula,
  /// Every item is the midpoint between the largest stacked and the smallest
  /// laid-out size so far. Not the literal construction; denominators grow as 2^k.
  OrderPreserving,
};

struct FourThirdsState {
  std::size_t n = 0;
  Rational delta;
  int phase = 1;
  std::size_t i = 1;  // 1 + number of stacking events
  std::size_t k = 1;  // items revealed since the last stacking event, counting from 1
  std::size_t t = 0;  // stacked items so far
  std::vector<Rational> sizes;
  std::vector<bool> stacked;  // phase-1 items only
  std::optional<Rational> epoch_reference;
  std::optional<Rational> last_laid_out;
  std::optional<Rational> max_stacked;
  std::optional<Rational> min_laid_out;
  std::size_t bins_after_phase1 = 0;
  std::size_t formula_fallbacks = 0;

  std::size_t phase1_length() const { return 4 * n / 3; }
  /// Fraction p with p * n = bins used after phase 1.
  Rational p() const;
};

/// 2n announcements of 1/2. Throws BadParameter unless n > 0 and 3 | n.
Announcement four_thirds_announce(std::size_t n, const Rational& delta);

/// Size of the next phase-1 item for the current state (does not mutate).
Rational four_thirds_next(const FourThirdsState& state, FourThirdsSchedule schedule = FourThirdsSchedule::Formula);

/// Phase-2 sizes for a completed phase 1. Throws ConstructionFailure if no
/// size fits next to every stacked item but next to no laid-out item.
std::vector<Rational> four_thirds_phase2(const FourThirdsState& state);

class FourThirdsAdversary final : public AdaptiveAdversary {
 public:
  FourThirdsAdversary(std::size_t n, Rational delta, FourThirdsSchedule schedule = FourThirdsSchedule::Formula);

  std::string_view name() const override { return "fourthirds"; }
  Announcement announce() override;
  std::optional<Rational> next(const PackingState& state) override;
  void observe(const Item& item, std::size_t bin, const PackingState& state) override;
  Counters counters() const override;

  const FourThirdsState& state() const { return state_; }

 private:
  FourThirdsSchedule schedule_;
  FourThirdsState state_;
  std::vector<Rational> phase2_;
};

/// Explicit packing of a completed 4/3 game into n bins: each large phase-2
/// item with one stacked item, everything else pairwise. Verified before return.
OptResult four_thirds_certificate(const Transcript& transcript);

/// Indices of the phase-1 items that were stacked in `transcript`.
std::vector<bool> four_thirds_stacked_items(const Transcript& transcript);

// ---------------------------------------------------------------------------
// Three-phase construction for delta > 41/43: 3n items announced at 43/168.
// Phase 1 emits n items of 1/7 + eps. If the algorithm used more than n/4
// bins, the remaining 2n items are tiny (43/168 (1 - delta) < 1/84).
// Otherwise phase 2 emits n items of 1/3 + eps; if more than 3n/4 bins are
// in use the last n items are tiny, else phase 3 emits n items of 1/2 + eps.
// ---------------------------------------------------------------------------

enum class YaoBranch { TinyAfterPhase1 = 1, TinyAfterPhase2 = 2, Full = 3 };

struct YaoState {
  std::size_t n = 0;
  Rational delta;
  Rational epsilon;
  Rational tiny;
  int phase = 1;  // 1, 2, 3, or 4 for the tiny tail
  std::size_t emitted = 0;
  std::optional<YaoBranch> branch;
  std::size_t bins_after_phase1 = 0;
  std::size_t bins_after_phase2 = 0;
};

/// Half of the tightest slack among: 1/2 + eps inside the band, six phase-1
/// items with twelve tiny ones in a bin, two items of each class (third
/// class tiny) in a bin, and 1/7 + 1/3 + 1/2 + 3 eps <= 1.
Rational yao_epsilon(const Rational& delta);

/// 3n announcements of 43/168. Throws BadParameter unless 12 | n, n > 0 and 41/43 < delta <= 1.
Announcement yao_announce(std::size_t n, const Rational& delta);

class YaoAdversary final : public AdaptiveAdversary {
 public:
  YaoAdversary(std::size_t n, Rational delta);

  std::string_view name() const override { return "yao4143"; }
  Announcement announce() override;
  std::optional<Rational> next(const PackingState& state) override;
  void observe(const Item& item, std::size_t bin, const PackingState& state) override;
  Counters counters() const override;

  const YaoState& state() const { return state_; }

 private:
  YaoState state_;
};

/// Branch actually taken in a completed game, inferred from the sizes.
YaoBranch yao_branch(const Transcript& transcript);

/// n/6, n/2 or n bins depending on the branch. Verified before return.
OptResult yao_certificate(const Transcript& transcript);

/// Registry: fourthirds, yao4143.
std::span<const std::string_view> adversary_names();
std::unique_ptr<AdaptiveAdversary> make_adversary(std::string_view name, std::size_t n, const Rational& delta);
/// Dispatches to the certificate of the named construction.
OptResult adversary_certificate(std::string_view name, const Transcript& transcript);

}  // namespace binestim
