#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "binestim/delayed_best_fit.hpp"
#include "binestim/model.hpp"
#include "binestim/referee.hpp"

namespace binestim {

enum class OptMode { Exact, Pairing, SizeLowerBound, Certificate };

OptMode parse_opt_mode(std::string_view name);
std::string_view to_string(OptMode mode);

struct FileSource {
  std::filesystem::path path;
};

/// profile is uniform, halves, mixed or twobin. Trial t uses seed + t.
struct GeneratorSource {
  std::string profile;
  std::size_t n = 0;
  Rational delta;
  std::uint64_t seed = 0;
  bool endpoints_only = false;
};

struct AdversarySource {
  std::string name;
  std::size_t n = 0;
  Rational delta;
};

using Source = std::variant<FileSource, GeneratorSource, AdversarySource>;

/// Parses "profile:n:delta:seed".
GeneratorSource parse_generator_spec(std::string_view spec);

struct ExperimentConfig {
  std::vector<std::string> algorithms;
  Source source;
  std::size_t trials = 1;
  OptMode opt_mode = OptMode::Exact;
  /// Guarantee A <= c OPT + K; without c every row reports unknown.
  std::optional<Rational> c;
  std::int64_t K = 0;
  std::size_t exact_limit = 20;
  std::size_t jobs = 1;
};

enum class Guarantee { Holds, Violated, Unknown, Error };

std::string_view to_string(Guarantee g);
Guarantee parse_guarantee(std::string_view name);

/// Load histogram buckets: [0, 1/3), [1/3, 1/2), [1/2, 2/3), [2/3, 1].
using FillHistogram = std::array<std::size_t, 4>;
FillHistogram fill_histogram(const PackingState& state);

struct ReportRow {
  std::string instance_id;
  std::string algorithm;
  std::size_t n = 0;
  Rational delta;
  std::size_t alg_bins = 0;
  std::size_t opt_bins = 0;
  OptMode opt_mode = OptMode::Exact;
  bool opt_exact = false;
  double ratio = 0.0;
  Guarantee guarantee = Guarantee::Unknown;
  FillHistogram fill{};
  std::optional<BinTypeCounts> bin_types;  // dbf on two-per-bin instances
  Counters counters;
  std::string error;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Runs every (instance, algorithm) cell. Errors land in the row instead of
/// aborting the grid. Rows come back sorted by (instance_id, algorithm).
std::vector<ReportRow> run_experiment(const ExperimentConfig& config);

/// Header: instance_id,algorithm,n,delta,alg_bins,opt_bins,opt_mode,ratio,guarantee_ok
std::string emit_csv(std::span<const ReportRow> rows);
std::string emit_json(std::span<const ReportRow> rows, int indent = 2);
std::vector<ReportRow> rows_from_json(std::string_view json);

}  // namespace binestim
