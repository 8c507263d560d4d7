#include "binestim/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "binestim/adversary.hpp"
#include "binestim/algorithms.hpp"
#include "binestim/errors.hpp"
#include "binestim/generators.hpp"
#include "binestim/instance_io.hpp"
#include "binestim/oracle.hpp"

namespace binestim {
namespace {

using json = nlohmann::ordered_json;

struct PreparedInstance {
  std::string id;
  Instance instance;
  std::optional<OptResult> opt;
  std::string opt_error;
};

std::string trial_id(const GeneratorSource& g, std::size_t trial) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04zu", trial);
  return g.profile + "-n" + std::to_string(g.n) + "-s" + std::to_string(g.seed) + "-t" + buf;
}

Instance generate(const GeneratorSource& g, std::uint64_t seed) {
  if (g.profile == "twobin") return gen_two_per_bin(g.n, g.delta, seed, g.endpoints_only);
  return gen_random(g.n, g.delta, seed, parse_profile(g.profile), g.endpoints_only);
}

OptResult compute_opt(OptMode mode, std::span<const Rational> sizes, std::size_t limit) {
  switch (mode) {
    case OptMode::Exact: return opt_exact(sizes, limit);
    case OptMode::Pairing: return opt_pairing(sizes);
    case OptMode::SizeLowerBound: return opt_lower_bound(sizes);
    case OptMode::Certificate: break;
  }
  throw BadParameter("opt mode 'certificate' needs an adversary source");
}

double ratio_of(std::size_t alg, std::size_t opt) {
  if (opt == 0) return alg == 0 ? 1.0 : 0.0;
  return static_cast<double>(alg) / static_cast<double>(opt);
}

// A lower-bound OPT can only confirm the inequality; never refute it.
Guarantee judge(std::size_t alg_bins, const OptResult& opt, const std::optional<Rational>& c, std::int64_t K) {
  if (!c) return Guarantee::Unknown;
  if (competitive_point(alg_bins, opt, *c, K)) return Guarantee::Holds;
  return opt.exact ? Guarantee::Violated : Guarantee::Unknown;
}

void fill_row(ReportRow& row, const Transcript& transcript, const OptResult& opt, const ExperimentConfig& config) {
  row.alg_bins = transcript.bins_used();
  row.opt_bins = opt.bins;
  row.opt_exact = opt.exact;
  row.ratio = ratio_of(row.alg_bins, row.opt_bins);
  row.guarantee = judge(row.alg_bins, opt, config.c, config.K);
  row.fill = fill_histogram(transcript.final_state);
  row.counters = transcript.counters;
  if (row.algorithm == "dbf" && admits_at_most_two_per_bin(transcript.final_state.sizes())) {
    row.bin_types = dbf_classify_bins(transcript);
  }
}

void run_parallel(std::size_t tasks, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(tasks, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks; i = next++) body(i);
    });
  }
}

std::vector<PreparedInstance> prepare(const ExperimentConfig& config) {
  std::vector<PreparedInstance> out;
  if (const auto* f = std::get_if<FileSource>(&config.source)) {
    Instance inst = read_instance_file(f->path);
    if (!inst.has_actual()) throw ParseError("instance file " + f->path.string() + " has no actual sizes");
    out.push_back({f->path.filename().string(), std::move(inst), std::nullopt, {}});
  } else if (const auto* g = std::get_if<GeneratorSource>(&config.source)) {
    if (config.trials == 0) throw BadParameter("trials must be positive");
    for (std::size_t t = 0; t < config.trials; ++t) {
      out.push_back({trial_id(*g, t), generate(*g, g->seed + t), std::nullopt, {}});
    }
  }
  return out;
}

}  // namespace

OptMode parse_opt_mode(std::string_view name) {
  if (name == "exact") return OptMode::Exact;
  if (name == "pairing") return OptMode::Pairing;
  if (name == "size-lower-bound") return OptMode::SizeLowerBound;
  if (name == "certificate") return OptMode::Certificate;
  throw BadParameter("unknown opt mode '" + std::string(name) + "'");
}

std::string_view to_string(OptMode mode) {
  switch (mode) {
    case OptMode::Exact: return "exact";
    case OptMode::Pairing: return "pairing";
    case OptMode::SizeLowerBound: return "size-lower-bound";
    case OptMode::Certificate: return "certificate";
  }
  return "unknown";
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Holds: return "true";
    case Guarantee::Violated: return "false";
    case Guarantee::Unknown: return "unknown";
    case Guarantee::Error: return "error";
  }
  return "error";
}

Guarantee parse_guarantee(std::string_view name) {
  if (name == "true") return Guarantee::Holds;
  if (name == "false") return Guarantee::Violated;
  if (name == "unknown") return Guarantee::Unknown;
  if (name == "error") return Guarantee::Error;
  throw ParseError("unknown guarantee value '" + std::string(name) + "'");
}

GeneratorSource parse_generator_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const auto colon = spec.find(':', pos);
    parts.push_back(spec.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 4) throw BadParameter("generator spec must be profile:n:delta:seed, got '" + std::string(spec) + "'");

  auto integer = [&](std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
      throw BadParameter(std::string("bad ") + what + " '" + std::string(s) + "' in generator spec");
    }
    return v;
  };
  GeneratorSource g;
  g.profile = std::string(parts[0]);
  if (g.profile != "twobin") parse_profile(g.profile);
  g.n = integer(parts[1], "n");
  try {
    g.delta = Rational::parse(parts[2]);
  } catch (const ParseError& e) {
    throw BadParameter(e.what());
  }
  g.seed = integer(parts[3], "seed");
  return g;
}

FillHistogram fill_histogram(const PackingState& state) {
  FillHistogram h{};
  const Rational third(1, 3), half(1, 2), two_thirds(2, 3);
  for (const auto& bin : state.bins()) {
    if (bin.load < third) ++h[0];
    else if (bin.load < half) ++h[1];
    else if (bin.load < two_thirds) ++h[2];
    else ++h[3];
  }
  return h;
}

std::vector<ReportRow> run_experiment(const ExperimentConfig& config) {
  if (config.algorithms.empty()) throw BadParameter("no algorithms given");
  for (const auto& a : config.algorithms) make_algorithm(a);

  const auto* adversary = std::get_if<AdversarySource>(&config.source);
  if (adversary) {
    make_adversary(adversary->name, adversary->n, adversary->delta);
  } else if (config.opt_mode == OptMode::Certificate) {
    throw BadParameter("opt mode 'certificate' needs an adversary source");
  }

  std::vector<PreparedInstance> instances = prepare(config);
  run_parallel(instances.size(), config.jobs, [&](std::size_t i) {
    auto& p = instances[i];
    try {
      p.opt = compute_opt(config.opt_mode, p.instance.actual, config.exact_limit);
    } catch (const std::exception& e) {
      p.opt_error = e.what();
    }
  });

  const std::size_t cells = adversary ? config.algorithms.size() : instances.size() * config.algorithms.size();
  std::vector<ReportRow> rows(cells);
  run_parallel(cells, config.jobs, [&](std::size_t cell) {
    ReportRow& row = rows[cell];
    row.opt_mode = config.opt_mode;
    try {
      if (adversary) {
        row.algorithm = config.algorithms[cell];
        row.instance_id = adversary->name + "-n" + std::to_string(adversary->n);
        row.n = adversary->n;
        row.delta = adversary->delta;
        auto alg = make_algorithm(row.algorithm);
        auto adv = make_adversary(adversary->name, adversary->n, adversary->delta);
        const Transcript transcript = run_adaptive_game(*alg, *adv);
        row.n = transcript.announcement.size();
        const auto sizes = transcript.actual_sizes();
        const OptResult opt = config.opt_mode == OptMode::Certificate
                                  ? adversary_certificate(adversary->name, transcript)
                                  : compute_opt(config.opt_mode, sizes, config.exact_limit);
        fill_row(row, transcript, opt, config);
      } else {
        const auto& p = instances[cell / config.algorithms.size()];
        row.algorithm = config.algorithms[cell % config.algorithms.size()];
        row.instance_id = p.id;
        row.n = p.instance.announcement.size();
        row.delta = p.instance.announcement.delta();
        auto alg = make_algorithm(row.algorithm);
        const Transcript transcript = run_game(*alg, p.instance);
        if (!p.opt) throw Error(p.opt_error);
        fill_row(row, transcript, *p.opt, config);
      }
    } catch (const std::exception& e) {
      row.guarantee = Guarantee::Error;
      row.error = e.what();
    }
  });

  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.instance_id, a.algorithm) < std::tie(b.instance_id, b.algorithm);
  });
  return rows;
}

std::string emit_csv(std::span<const ReportRow> rows) {
  std::ostringstream out;
  out << "instance_id,algorithm,n,delta,alg_bins,opt_bins,opt_mode,ratio,guarantee_ok\n";
  char ratio[64];
  for (const auto& r : rows) {
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    out << r.instance_id << ',' << r.algorithm << ',' << r.n << ',' << r.delta.str() << ',' << r.alg_bins << ','
        << r.opt_bins << ',' << to_string(r.opt_mode) << ',' << ratio << ',' << to_string(r.guarantee) << '\n';
  }
  return out.str();
}

std::string emit_json(std::span<const ReportRow> rows, int indent) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["instance_id"] = r.instance_id;
    j["algorithm"] = r.algorithm;
    j["n"] = r.n;
    j["delta"] = r.delta.str();
    j["alg_bins"] = r.alg_bins;
    j["opt_bins"] = r.opt_bins;
    j["opt_mode"] = to_string(r.opt_mode);
    j["opt_exact"] = r.opt_exact;
    j["ratio"] = r.ratio;
    j["guarantee_ok"] = to_string(r.guarantee);
    j["fill_histogram"] = r.fill;
    if (r.bin_types) {
      const auto& b = *r.bin_types;
      j["bin_types"] = {{"x", b.x}, {"x2", b.x2}, {"xs", b.xs}, {"y", b.y}, {"y2", b.y2}, {"z", b.z}, {"n1", b.n1}};
    } else {
      j["bin_types"] = nullptr;
    }
    j["counters"] = json::object();
    for (const auto& [k, v] : r.counters) j["counters"][k] = v;
    j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent) + "\n";
}

std::vector<ReportRow> rows_from_json(std::string_view text) {
  std::vector<ReportRow> rows;
  try {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw ParseError("report JSON must be an array");
    for (const auto& j : arr) {
      ReportRow r;
      r.instance_id = j.at("instance_id").get<std::string>();
      r.algorithm = j.at("algorithm").get<std::string>();
      r.n = j.at("n").get<std::size_t>();
      r.delta = Rational::parse(j.at("delta").get<std::string>());
      r.alg_bins = j.at("alg_bins").get<std::size_t>();
      r.opt_bins = j.at("opt_bins").get<std::size_t>();
      r.opt_mode = parse_opt_mode(j.at("opt_mode").get<std::string>());
      r.opt_exact = j.at("opt_exact").get<bool>();
      r.ratio = j.at("ratio").get<double>();
      r.guarantee = parse_guarantee(j.at("guarantee_ok").get<std::string>());
      r.fill = j.at("fill_histogram").get<FillHistogram>();
      if (const auto& b = j.at("bin_types"); !b.is_null()) {
        r.bin_types = BinTypeCounts{b.at("x").get<std::size_t>(),  b.at("x2").get<std::size_t>(),
                                    b.at("xs").get<std::size_t>(), b.at("y").get<std::size_t>(),
                                    b.at("y2").get<std::size_t>(), b.at("z").get<std::size_t>(),
                                    b.at("n1").get<std::size_t>()};
      }
      for (const auto& [k, v] : j.at("counters").items()) r.counters[k] = v.get<std::int64_t>();
      r.error = j.at("error").get<std::string>();
      rows.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  return rows;
}

}  // namespace binestim
