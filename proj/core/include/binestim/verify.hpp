#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binestim/delayed_best_fit.hpp"
#include "binestim/planned_harmonic.hpp"
#include "binestim/referee.hpp"

namespace binestim {

// Per-run lemma scanners shared by the verify suites and the test binaries.

struct PhLemmaReport {
  bool all_large_filled = false;
  /// Every opened designated bin except the last one reaches 2/3.
  bool designated_filled = true;
  std::size_t bins_below_two_thirds = 0;
  Rational weight;  // W(L) over actual sizes
  bool weight_bound = true;  // bins <= W(L) + 2
  /// Bins holding only items of size <= 1/4 (weight 0).
  std::size_t small_only_bins = 0;
  std::int64_t reserved_small_placements = 0;
  std::string detail;
};
PhLemmaReport check_ph_lemmas(const PlannedHarmonic& ph, const Transcript& transcript);

struct DbfLemmaReport {
  BinTypeCounts counts;
  bool no_zs = true;          // y > 0 implies z = 0 and bins = n1 + y + y2
  bool unfitting_specials = true;
  bool opt_lb_applies = false;
  bool opt_lb = true;         // OPT >= n1 + (y' - xs)/2
  std::string detail;
};
DbfLemmaReport check_dbf_lemmas(const Transcript& transcript, std::size_t opt_bins);

struct FourThirdsReport {
  bool sizes_in_band = true;
  bool ordering = true;  // max stacked < min laid-out over phase 1
  std::string detail;
};
FourThirdsReport check_fourthirds_game(const Transcript& transcript);

/// Sizes of one random feasible bin, biased toward the class boundaries.
std::vector<Rational> sample_feasible_bin(std::mt19937_64& rng);

/// Exhaustive set-partition search. Exponential; meant for n <= 10.
std::size_t opt_by_enumeration(std::span<const Rational> sizes);

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool passed, const std::string& what);
};

struct SuiteOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

/// weights, dbf-lemmas, oracle-equiv, ph-lemmas, fourthirds, yao, all.
std::span<const std::string_view> suite_names();
/// Throws BadParameter for unknown suites.
std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& options = {});

}  // namespace binestim
