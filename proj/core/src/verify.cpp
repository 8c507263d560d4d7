#include "binestim/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "binestim/adversary.hpp"
#include "binestim/algorithms.hpp"
#include "binestim/errors.hpp"
#include "binestim/generators.hpp"
#include "binestim/oracle.hpp"

namespace binestim {
namespace {

const Rational kTwoThirds(2, 3);

std::string id_list(std::size_t a, std::size_t b) { return std::to_string(a) + "," + std::to_string(b); }

// Restricted-growth enumeration: item i goes to an existing bin or opens bin `used`.
void enumerate(std::span<const Rational> sizes, std::size_t i, std::vector<Rational>& loads, std::size_t& best) {
  if (loads.size() >= best) return;
  if (i == sizes.size()) {
    best = loads.size();
    return;
  }
  for (std::size_t b = 0; b < loads.size(); ++b) {
    if (loads[b] + sizes[i] <= Rational(1)) {
      loads[b] += sizes[i];
      enumerate(sizes, i + 1, loads, best);
      loads[b] -= sizes[i];
    }
  }
  loads.push_back(sizes[i]);
  enumerate(sizes, i + 1, loads, best);
  loads.pop_back();
}

constexpr std::array<std::string_view, 7> kSuites{"weights", "dbf-lemmas", "oracle-equiv", "ph-lemmas",
                                                  "fourthirds", "yao", "all"};

std::vector<CheckResult> suite_weights(const SuiteOptions& o) {
  CheckResult fixed{"weight values"}, bound{"bin weight <= 3/2"};
  fixed.record(weight(Rational(3, 5)) == Rational(1), "w(3/5) != 1");
  fixed.record(weight(Rational(2, 5)) == Rational(1, 2), "w(2/5) != 1/2");
  fixed.record(weight(Rational(3, 10)) == Rational(1, 3), "w(3/10) != 1/3");
  fixed.record(weight(Rational(1, 5)) == Rational(0), "w(1/5) != 0");

  std::mt19937_64 rng(o.seed);
  const std::size_t samples = o.trials * 500;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto bin = sample_feasible_bin(rng);
    std::string what;
    const bool ok = max_bin_weight_check(bin);
    if (!ok) {
      for (const auto& x : bin) what += x.str() + " ";
    }
    bound.record(ok, "bin {" + what + "} exceeds 3/2");
  }
  return {fixed, bound};
}

std::vector<CheckResult> suite_dbf(const SuiteOptions& o) {
  CheckResult guarantee{"dbf <= 4/3 OPT + 1"}, no_zs{"dbf no Z bins when y > 0"},
      unfitting{"dbf special/large pairs overflow"}, opt_lb{"dbf OPT lower bound"};
  const std::array<Rational, 5> deltas{Rational(1, 100), Rational(1, 20), Rational(1, 10), Rational(1, 5),
                                       Rational(1, 3)};
  std::mt19937_64 rng(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
    const Rational& delta = deltas[t % deltas.size()];
    const Instance inst = gen_two_per_bin(n, delta, o.seed * 1000003 + t, t % 2 == 1);
    DelayedBestFit dbf;
    const Transcript tr = run_game(dbf, inst);
    const OptResult opt = opt_pairing(inst.actual);
    const std::string tag = "trial " + std::to_string(t) + " (n=" + std::to_string(n) + ", delta=" + delta.str() + ")";
    guarantee.record(competitive_point(tr.bins_used(), opt, Rational(4, 3), 1),
                     tag + ": " + std::to_string(tr.bins_used()) + " bins vs OPT " + std::to_string(opt.bins));
    const auto r = check_dbf_lemmas(tr, opt.bins);
    if (r.counts.y > 0) no_zs.record(r.no_zs, tag + ": " + r.detail);
    unfitting.record(r.unfitting_specials, tag + ": " + r.detail);
    if (r.opt_lb_applies) opt_lb.record(r.opt_lb, tag + ": " + r.detail);
  }
  return {guarantee, no_zs, unfitting, opt_lb};
}

std::vector<CheckResult> suite_oracle(const SuiteOptions& o) {
  CheckResult pairing{"pairing = exact (n <= 12)"}, enumeration{"exact = enumeration (n <= 8)"};
  std::mt19937_64 rng(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const Instance inst = gen_two_per_bin(n, Rational(1, 10), o.seed + t);
    const auto p = opt_pairing(inst.actual).bins;
    const auto e = opt_exact(inst.actual).bins;
    pairing.record(p == e, "trial " + std::to_string(t) + ": pairing " + std::to_string(p) + ", exact " +
                               std::to_string(e));
  }
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    const Instance inst = gen_random(n, Rational(1, 10), o.seed + t, t % 3 == 0 ? Profile::Mixed : Profile::Uniform);
    const auto e = opt_exact(inst.actual).bins;
    const auto b = opt_by_enumeration(inst.actual);
    enumeration.record(e == b, "trial " + std::to_string(t) + ": exact " + std::to_string(e) + ", enumeration " +
                                   std::to_string(b));
  }
  return {pairing, enumeration};
}

std::vector<CheckResult> suite_ph(const SuiteOptions& o) {
  CheckResult guarantee{"ph <= 3/2 OPT + 4"}, designated{"ph designated bins reach 2/3"},
      low{"ph at most 4 bins below 2/3"}, weight_bound{"ph bins <= W + 2 (no small-only bins)"};
  const Rational delta(1, 35);
  std::mt19937_64 rng(o.seed);
  for (Profile profile : {Profile::Uniform, Profile::Halves, Profile::Mixed}) {
    for (std::size_t t = 0; t < o.trials; ++t) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 18)(rng);
      const Instance inst = gen_random(n, delta, o.seed * 7919 + t, profile, t % 2 == 1);
      PlannedHarmonic ph;
      const std::string tag = std::string(to_string(profile)) + " trial " + std::to_string(t);
      Transcript tr;
      try {
        tr = run_game(ph, inst);
      } catch (const std::exception& e) {
        guarantee.record(false, tag + ": " + e.what());
        continue;
      }
      const OptResult opt = opt_exact(inst.actual);
      guarantee.record(competitive_point(tr.bins_used(), opt, Rational(3, 2), 4),
                       tag + ": " + std::to_string(tr.bins_used()) + " bins vs OPT " + std::to_string(opt.bins));
      const auto r = check_ph_lemmas(ph, tr);
      if (r.all_large_filled) {
        designated.record(r.designated_filled, tag + ": " + r.detail);
        low.record(r.bins_below_two_thirds <= 4, tag + ": " + std::to_string(r.bins_below_two_thirds) + " low bins");
      } else if (r.small_only_bins == 0) {
        weight_bound.record(r.weight_bound, tag + ": " + std::to_string(tr.bins_used()) + " bins, W = " + r.weight.str());
      }
    }
  }
  return {guarantee, designated, low, weight_bound};
}

std::vector<CheckResult> suite_fourthirds(const SuiteOptions&) {
  CheckResult ratio{"fourthirds ratio >= 4/3 - 1/20 (n=150)"}, honest{"fourthirds sizes in band"},
      order{"fourthirds stacked < laid out"}, small{"fourthirds certificate = pairing (n <= 12)"};
  const Rational delta(1, 100);
  for (std::string_view alg_name : algorithm_names()) {
    for (std::size_t n : {3, 6, 9, 12, 150}) {
      auto alg = make_algorithm(alg_name);
      FourThirdsAdversary adv(n, delta);
      const std::string tag = std::string(alg_name) + " n=" + std::to_string(n);
      try {
        const Transcript tr = run_adaptive_game(*alg, adv);
        const OptResult cert = four_thirds_certificate(tr);
        const auto r = check_fourthirds_game(tr);
        honest.record(r.sizes_in_band, tag + ": " + r.detail);
        order.record(r.ordering, tag + ": " + r.detail);
        if (n == 150) {
          const Rational got(static_cast<std::int64_t>(tr.bins_used()), static_cast<std::int64_t>(cert.bins));
          ratio.record(got >= Rational(4, 3) - Rational(1, 20), tag + ": ratio " + got.str());
        } else {
          const auto p = opt_pairing(tr.actual_sizes()).bins;
          small.record(p == cert.bins, tag + ": certificate " + std::to_string(cert.bins) + ", pairing " +
                                           std::to_string(p));
        }
      } catch (const std::exception& e) {
        ratio.record(false, tag + ": " + e.what());
      }
    }
  }
  return {ratio, honest, order, small};
}

std::vector<CheckResult> suite_yao(const SuiteOptions&) {
  CheckResult ratio{"yao4143 ratio >= 3/2 - 10/n (n=120)"}, honest{"yao4143 sizes in band"};
  const Rational delta(42, 43);
  const std::size_t n = 120;
  for (std::string_view alg_name : {"nextfit", "firstfit", "bestfit", "harmonic4"}) {
    auto alg = make_algorithm(alg_name);
    YaoAdversary adv(n, delta);
    const std::string tag(alg_name);
    try {
      const Transcript tr = run_adaptive_game(*alg, adv);
      bool in_band = true;
      for (const auto& s : tr.steps) in_band = in_band && validate_actual(s.item.announced, delta, s.item.actual);
      honest.record(in_band, tag + ": size outside band");
      const OptResult cert = yao_certificate(tr);
      const Rational got(static_cast<std::int64_t>(tr.bins_used()), static_cast<std::int64_t>(cert.bins));
      ratio.record(got >= Rational(3, 2) - Rational(10, static_cast<std::int64_t>(n)), tag + ": ratio " + got.str());
    } catch (const std::exception& e) {
      ratio.record(false, tag + ": " + e.what());
    }
  }
  return {ratio, honest};
}

}  // namespace

void CheckResult::record(bool passed, const std::string& what) {
  ++cases;
  if (!passed) {
    if (failures == 0) first_failure = what;
    ++failures;
  }
}

PhLemmaReport check_ph_lemmas(const PlannedHarmonic& ph, const Transcript& t) {
  PhLemmaReport r;
  r.all_large_filled = ph.all_large_filled();
  const auto& state = t.final_state;

  std::vector<std::size_t> opened;
  for (const auto& b : ph.reserved_bins()) {
    if (b) opened.push_back(*b);
  }
  // B_1..B_k are opened in order, so the last opened one is the exempt one.
  for (std::size_t i = 0; i + 1 < opened.size(); ++i) {
    if (state.bin(opened[i]).load < kTwoThirds) {
      r.designated_filled = false;
      r.detail = "designated bin " + std::to_string(opened[i]) + " has load " + state.bin(opened[i]).load.str();
      break;
    }
  }
  const auto sizes = state.sizes();
  for (const auto& bin : state.bins()) {
    if (bin.load < kTwoThirds) ++r.bins_below_two_thirds;
    if (std::none_of(bin.items.begin(), bin.items.end(), [&](std::size_t id) { return sizes[id] > Rational(1, 4); })) {
      ++r.small_only_bins;
    }
  }
  r.weight = weigh(t.actual_sizes()).total;
  r.weight_bound = Rational(static_cast<std::int64_t>(t.bins_used())) <= r.weight + Rational(2);
  if (auto it = t.counters.find("reserved_small_placements"); it != t.counters.end()) {
    r.reserved_small_placements = it->second;
  }
  return r;
}

DbfLemmaReport check_dbf_lemmas(const Transcript& t, std::size_t opt_bins) {
  DbfLemmaReport r;
  const auto types = dbf_bin_types(t);
  r.counts = dbf_classify_bins(t);
  const auto& c = r.counts;
  const auto& state = t.final_state;

  if (c.y > 0 && (c.z != 0 || c.total() != c.n1 + c.y + c.y2)) {
    r.no_zs = false;
    r.detail = "y=" + std::to_string(c.y) + " but z=" + std::to_string(c.z);
  }

  const Rational half(1, 2);
  std::vector<std::size_t> specials, larges;
  for (std::size_t b = 0; b < types.size(); ++b) {
    for (std::size_t id : state.bin(b).items) {
      const auto& size = state.sizes()[id];
      if ((types[b] == DbfBinType::Y || types[b] == DbfBinType::Y2) && size <= half) {
        // In a Y2 bin the special is the one the reserve rule placed first.
        if (id == state.bin(b).items.front()) specials.push_back(id);
      } else if ((types[b] == DbfBinType::X || types[b] == DbfBinType::X2) && size > half) {
        larges.push_back(id);
      }
    }
  }
  const auto sizes = state.sizes();
  for (std::size_t s : specials) {
    for (std::size_t l : larges) {
      if (sizes[s] + sizes[l] <= Rational(1)) {
        r.unfitting_specials = false;
        r.detail = "special/large pair " + id_list(s, l) + " fits together";
        break;
      }
    }
    if (!r.unfitting_specials) break;
  }

  if (c.y_prime() >= c.xs) {
    r.opt_lb_applies = true;
    const Rational bound = Rational(static_cast<std::int64_t>(c.n1)) +
                           Rational(static_cast<std::int64_t>(c.y_prime() - c.xs), 2);
    r.opt_lb = Rational(static_cast<std::int64_t>(opt_bins)) >= bound;
    if (!r.opt_lb) r.detail = "OPT " + std::to_string(opt_bins) + " below bound " + bound.str();
  }
  return r;
}

FourThirdsReport check_fourthirds_game(const Transcript& t) {
  FourThirdsReport r;
  const auto& ann = t.announcement;
  for (const auto& s : t.steps) {
    if (!validate_actual(s.item.announced, ann.delta(), s.item.actual)) {
      r.sizes_in_band = false;
      r.detail = "item " + std::to_string(s.item.id) + " of size " + s.item.actual.str() + " leaves the band";
      break;
    }
  }
  const auto stacked = four_thirds_stacked_items(t);
  std::optional<Rational> max_stacked, min_laid;
  for (std::size_t id = 0; id < stacked.size(); ++id) {
    const auto& s = t.steps[id].item.actual;
    if (stacked[id]) {
      if (!max_stacked || s > *max_stacked) max_stacked = s;
    } else if (!min_laid || s < *min_laid) {
      min_laid = s;
    }
  }
  if (max_stacked && min_laid && !(*max_stacked < *min_laid)) {
    r.ordering = false;
    r.detail = "stacked " + max_stacked->str() + " vs laid out " + min_laid->str();
  }
  return r;
}

std::vector<Rational> sample_feasible_bin(std::mt19937_64& rng) {
  constexpr std::int64_t kGrid = 5040;
  std::vector<Rational> items;
  std::int64_t room = kGrid;
  std::uniform_int_distribution<int> pick_class(1, 4);
  for (int attempt = 0; attempt < 12 && room > 0; ++attempt) {
    const int k = pick_class(rng);
    // Class k spans (grid/(k+1), grid/k]; class 4 covers (0, grid/4].
    const std::int64_t lo = k == 4 ? 1 : kGrid / (k + 1) + 1;
    const std::int64_t hi = std::min(kGrid / k, room);
    if (lo > hi) continue;
    // Half the draws hug the lower class boundary, where weight per size peaks.
    const std::int64_t top = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? std::min(hi, lo + 20) : hi;
    const std::int64_t v = std::uniform_int_distribution<std::int64_t>(lo, top)(rng);
    items.emplace_back(v, kGrid);
    room -= v;
  }
  return items;
}

std::size_t opt_by_enumeration(std::span<const Rational> sizes) {
  std::size_t best = sizes.size();
  std::vector<Rational> loads;
  enumerate(sizes, 0, loads, best);
  return sizes.empty() ? 0 : best;
}

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& o) {
  static const std::array<std::pair<std::string_view, std::function<std::vector<CheckResult>(const SuiteOptions&)>>, 6>
      table{{{"weights", suite_weights},
             {"dbf-lemmas", suite_dbf},
             {"oracle-equiv", suite_oracle},
             {"ph-lemmas", suite_ph},
             {"fourthirds", suite_fourthirds},
             {"yao", suite_yao}}};
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : table) {
    if (suite == "all" || suite == name) {
      auto part = fn(o);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  if (out.empty() && suite != "all") throw BadParameter("unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace binestim
