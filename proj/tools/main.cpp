// binestim: generate instances, run algorithms, play adversaries, compute OPT.
//
// Exit codes: 0 ok, 1 guarantee or verification failure, 2 usage or parameter error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binestim/adversary.hpp"
#include "binestim/algorithms.hpp"
#include "binestim/errors.hpp"
#include "binestim/generators.hpp"
#include "binestim/harness.hpp"
#include "binestim/instance_io.hpp"
#include "binestim/oracle.hpp"
#include "binestim/verify.hpp"

namespace {

using namespace binestim;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const ParseError&) {
    throw UsageError(std::string(flag) + " expects p/q, got '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int report(const std::vector<ReportRow>& rows, const std::string& format) {
  std::cout << (format == "json" ? emit_json(rows) : emit_csv(rows));
  int code = kOk;
  for (const auto& r : rows) {
    if (r.guarantee == Guarantee::Error) std::cerr << r.instance_id << " / " << r.algorithm << ": " << r.error << '\n';
    if (r.guarantee == Guarantee::Violated || r.guarantee == Guarantee::Error) code = kFailure;
  }
  return code;
}

struct GenArgs {
  std::string profile;
  std::size_t n = 0;
  std::string delta;
  std::uint64_t seed = 0;
  std::string out;
  bool endpoints = false;
};

int cmd_gen(const GenArgs& a) {
  const Rational delta = rational_flag(a.delta, "--delta");
  const Instance inst = a.profile == "twobin" ? gen_two_per_bin(a.n, delta, a.seed, a.endpoints)
                                              : gen_random(a.n, delta, a.seed, parse_profile(a.profile), a.endpoints);
  if (a.out.empty() || a.out == "-") {
    std::cout << render_instance(inst);
  } else {
    write_instance_file(a.out, inst);
  }
  return kOk;
}

struct RunArgs {
  std::string algs;
  std::string in;
  std::string gen;
  std::size_t trials = 1;
  std::string opt_mode = "exact";
  std::string c;
  std::int64_t K = 0;
  std::string format = "csv";
  std::size_t jobs = 1;
  std::size_t exact_limit = kDefaultExactLimit;
  bool endpoints = false;
};

ExperimentConfig base_config(const RunArgs& a) {
  ExperimentConfig cfg;
  cfg.algorithms = split_list(a.algs);
  cfg.trials = a.trials;
  cfg.opt_mode = parse_opt_mode(a.opt_mode);
  if (!a.c.empty()) cfg.c = rational_flag(a.c, "--c");
  cfg.K = a.K;
  cfg.jobs = a.jobs;
  cfg.exact_limit = a.exact_limit;
  return cfg;
}

int cmd_run(const RunArgs& a) {
  ExperimentConfig cfg = base_config(a);
  if (a.in.empty() == a.gen.empty()) throw UsageError("run needs exactly one of --in or --gen");
  if (!a.in.empty()) {
    if (!std::filesystem::exists(a.in)) throw UsageError("no such file: " + a.in);
    cfg.source = FileSource{a.in};
  } else {
    GeneratorSource g = parse_generator_spec(a.gen);
    g.endpoints_only = a.endpoints;
    cfg.source = g;
  }
  return report(run_experiment(cfg), a.format);
}

struct DuelArgs {
  RunArgs run;
  std::string adversary;
  std::size_t n = 0;
  std::string delta;
  std::string transcript;
};

int cmd_duel(const DuelArgs& a) {
  ExperimentConfig cfg = base_config(a.run);
  const Rational delta = rational_flag(a.delta, "--delta");
  cfg.source = AdversarySource{a.adversary, a.n, delta};
  const auto rows = run_experiment(cfg);

  if (!a.transcript.empty()) {
    for (const auto& name : cfg.algorithms) {
      auto alg = make_algorithm(name);
      auto adv = make_adversary(a.adversary, a.n, delta);
      const Transcript t = run_adaptive_game(*alg, *adv);
      std::filesystem::path path = a.transcript;
      if (cfg.algorithms.size() > 1) path += "." + name;
      std::ofstream(path) << transcript_to_json(t);
    }
  }
  return report(rows, a.run.format);
}

int cmd_opt(const std::string& in, const std::string& mode, std::size_t limit) {
  if (!std::filesystem::exists(in)) throw UsageError("no such file: " + in);
  const Instance inst = read_instance_file(in);
  if (!inst.has_actual()) throw UsageError("instance has no actual sizes");
  OptResult r;
  switch (parse_opt_mode(mode)) {
    case OptMode::Exact: r = opt_exact(inst.actual, limit); break;
    case OptMode::Pairing: r = opt_pairing(inst.actual); break;
    case OptMode::SizeLowerBound: r = opt_lower_bound(inst.actual); break;
    case OptMode::Certificate: throw UsageError("--mode certificate applies to duels only");
  }
  if (r.exact) verify_certificate(inst.actual, r);
  std::cout << opt_to_json(r) << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts) {
  bool ok = true;
  for (const auto& r : run_suite(suite, opts)) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.ok()) std::cout << ", " << r.failures << " failed; first: " << r.first_failure;
    std::cout << ")\n";
    ok = ok && r.ok();
  }
  return ok ? kOk : kFailure;
}

void add_run_flags(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--alg", a.algs, "Comma-separated algorithm names")->required();
  cmd->add_option("--opt-mode", a.opt_mode, "exact | pairing | size-lower-bound | certificate");
  cmd->add_option("--c", a.c, "Guarantee factor c (p/q); omit to skip the check");
  cmd->add_option("--K", a.K, "Guarantee additive constant K");
  cmd->add_option("--format", a.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--exact-limit", a.exact_limit, "Largest n for exact OPT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online bin packing with size estimates"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a random instance");
  gen_cmd->add_option("--profile", gen.profile, "uniform | halves | mixed | twobin")->required();
  gen_cmd->add_option("--n", gen.n, "Number of items")->required();
  gen_cmd->add_option("--delta", gen.delta, "Accuracy (p/q)")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_flag("--adversarial-rounding", gen.endpoints, "Snap actual sizes to band endpoints");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run algorithms on instances");
  add_run_flags(run_cmd, run);
  run_cmd->add_option("--in", run.in, "Instance file");
  run_cmd->add_option("--gen", run.gen, "Generator spec profile:n:delta:seed");
  run_cmd->add_option("--trials", run.trials, "Generated instances (seed, seed+1, ...)")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--adversarial-rounding", run.endpoints, "Snap actual sizes to band endpoints");

  DuelArgs duel;
  duel.run.opt_mode = "certificate";
  auto* duel_cmd = app.add_subcommand("duel", "Play algorithms against an adaptive adversary");
  add_run_flags(duel_cmd, duel.run);
  duel_cmd->add_option("--adversary", duel.adversary, "fourthirds | yao4143")->required();
  duel_cmd->add_option("--n", duel.n, "Construction size parameter")->required();
  duel_cmd->add_option("--delta", duel.delta, "Accuracy (p/q)")->required();
  duel_cmd->add_option("--transcript", duel.transcript, "Write the game transcript as JSON");

  std::string opt_in, opt_mode = "exact";
  std::size_t opt_limit = kDefaultExactLimit;
  auto* opt_cmd = app.add_subcommand("opt", "Optimal packing of an instance's actual sizes");
  opt_cmd->add_option("--in", opt_in, "Instance file")->required();
  opt_cmd->add_option("--mode", opt_mode, "exact | pairing | size-lower-bound");
  opt_cmd->add_option("--exact-limit", opt_limit, "Largest n for exact OPT");

  std::string suite = "all";
  SuiteOptions suite_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("--suite", suite, "weights | dbf-lemmas | oracle-equiv | ph-lemmas | fourthirds | yao | all");
  verify_cmd->add_option("--trials", suite_opts.trials, "Trials per randomized check");
  verify_cmd->add_option("--seed", suite_opts.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*run_cmd) return cmd_run(run);
    if (*duel_cmd) return cmd_duel(duel);
    if (*opt_cmd) return cmd_opt(opt_in, opt_mode, opt_limit);
    if (*verify_cmd) return cmd_verify(suite, suite_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
