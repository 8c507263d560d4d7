#include "binestim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "binestim/errors.hpp"

namespace binestim {
namespace {

std::int64_t ceil_div(std::int64_t x, std::int64_t c) { return x <= 0 ? 0 : (x + c - 1) / c; }
std::int64_t ceil_div(const Rational& x, const Rational& c) { return x.sign() <= 0 ? 0 : (x / c).ceil(); }

/// Depth-first search over bin assignments of items sorted by decreasing size.
template <class Weight>
class BranchAndBound {
 public:
  BranchAndBound(std::vector<Weight> weights, Weight capacity)
      : w_(std::move(weights)), cap_(std::move(capacity)), suffix_(w_.size() + 1, Weight(0)) {
    for (std::size_t i = w_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + w_[i];
  }

  /// Returns the bin of every item in an optimal packing.
  std::vector<std::size_t> solve() {
    const std::size_t n = w_.size();
    std::size_t large = 0;
    for (const auto& x : w_) {
      if (x + x > cap_) ++large;
    }
    root_bound_ = std::max<std::size_t>(static_cast<std::size_t>(ceil_div(suffix_[0], cap_)), large);

    first_fit_decreasing();
    if (best_ == root_bound_) return best_assign_;

    assign_.assign(n, 0);
    loads_.clear();
    free_ = Weight(0);
    search(0);
    return best_assign_;
  }

  std::size_t bins() const { return best_; }

 private:
  void first_fit_decreasing() {
    std::vector<Weight> loads;
    best_assign_.assign(w_.size(), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::size_t b = 0;
      while (b < loads.size() && loads[b] + w_[i] > cap_) ++b;
      if (b == loads.size()) loads.push_back(Weight(0));
      loads[b] += w_[i];
      best_assign_[i] = b;
    }
    best_ = loads.size();
  }

  void search(std::size_t i) {
    if (done_) return;
    const std::size_t used = loads_.size();
    if (i == w_.size()) {
      if (used < best_) {
        best_ = used;
        best_assign_ = assign_;
        if (best_ == root_bound_) done_ = true;
      }
      return;
    }
    const std::size_t bound = used + static_cast<std::size_t>(ceil_div(suffix_[i] - free_, cap_));
    if (bound >= best_) return;

    // Identical items are interchangeable: keep their bin indices non-decreasing.
    const std::size_t first = (i > 0 && w_[i] == w_[i - 1]) ? assign_[i - 1] : 0;
    std::vector<Weight> tried;
    for (std::size_t b = first; b < used && !done_; ++b) {
      if (loads_[b] + w_[i] > cap_) continue;
      // Bins with equal load lead to equivalent subtrees.
      if (std::find(tried.begin(), tried.end(), loads_[b]) != tried.end()) continue;
      tried.push_back(loads_[b]);
      loads_[b] += w_[i];
      free_ -= w_[i];
      assign_[i] = b;
      search(i + 1);
      loads_[b] -= w_[i];
      free_ += w_[i];
    }
    if (done_ || used + 1 >= best_) return;
    loads_.push_back(w_[i]);
    free_ += cap_ - w_[i];
    assign_[i] = used;
    search(i + 1);
    free_ -= cap_ - w_[i];
    loads_.pop_back();
  }

  std::vector<Weight> w_;
  Weight cap_;
  std::vector<Weight> suffix_;
  std::vector<Weight> loads_;
  Weight free_{0};
  std::vector<std::size_t> assign_;
  std::vector<std::size_t> best_assign_;
  std::size_t best_ = 0;
  std::size_t root_bound_ = 0;
  bool done_ = false;
};

/// Scales sizes to integers over their common denominator when the total
/// stays well inside 64 bits.
std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>> scale_to_integers(
    std::span<const Rational> sizes) {
  mpz_class lcm = 1;
  for (const auto& s : sizes) {
    mpz_class den(s.denominator(), 10);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    if (mpz_sizeinbase(lcm.get_mpz_t(), 2) > 56) return std::nullopt;
  }
  std::vector<std::int64_t> out;
  out.reserve(sizes.size());
  for (const auto& s : sizes) {
    mpz_class num(s.numerator(), 10), den(s.denominator(), 10);
    mpz_class scaled = num * (lcm / den);
    out.push_back(scaled.get_si());
  }
  return std::make_pair(std::move(out), static_cast<std::int64_t>(lcm.get_si()));
}

OptResult from_assignment(const std::vector<std::size_t>& order, const std::vector<std::size_t>& assign,
                          std::size_t bins) {
  OptResult r;
  r.exact = true;
  r.bins = bins;
  r.certificate.assign(bins, {});
  for (std::size_t pos = 0; pos < order.size(); ++pos) r.certificate[assign[pos]].push_back(order[pos]);
  for (auto& bin : r.certificate) std::sort(bin.begin(), bin.end());
  return r;
}

void check_sizes(std::span<const Rational> sizes) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= Rational(0) || sizes[i] > Rational(1)) {
      throw BadParameter("item " + std::to_string(i) + " has size " + sizes[i].str() + " outside (0, 1]");
    }
  }
}

}  // namespace

OptResult opt_exact(std::span<const Rational> sizes, std::size_t limit) {
  if (sizes.size() > limit) {
    throw InstanceTooLarge("exact OPT is limited to " + std::to_string(limit) + " items, got " +
                           std::to_string(sizes.size()));
  }
  check_sizes(sizes);
  if (sizes.empty()) return OptResult{0, {}, true};

  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
  std::vector<Rational> sorted;
  for (std::size_t id : order) sorted.push_back(sizes[id]);

  if (auto scaled = scale_to_integers(sorted)) {
    BranchAndBound<std::int64_t> bnb(std::move(scaled->first), scaled->second);
    auto assign = bnb.solve();
    return from_assignment(order, assign, bnb.bins());
  }
  BranchAndBound<Rational> bnb(std::move(sorted), Rational(1));
  auto assign = bnb.solve();
  return from_assignment(order, assign, bnb.bins());
}

bool admits_at_most_two_per_bin(std::span<const Rational> sizes) {
  if (sizes.size() < 3) return true;
  std::vector<Rational> sorted(sizes.begin(), sizes.end());
  std::partial_sort(sorted.begin(), sorted.begin() + 3, sorted.end());
  return sorted[0] + sorted[1] + sorted[2] > Rational(1);
}

OptResult opt_pairing(std::span<const Rational> sizes) {
  check_sizes(sizes);
  if (!admits_at_most_two_per_bin(sizes)) {
    throw PreconditionViolated("three items fit into one bin; pairing OPT does not apply");
  }
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

  OptResult r;
  r.exact = true;
  std::size_t lo = 0, hi = order.size();
  while (lo < hi) {
    const std::size_t big = order[hi - 1];
    if (lo + 1 < hi && sizes[order[lo]] + sizes[big] <= Rational(1)) {
      r.certificate.push_back({std::min(order[lo], big), std::max(order[lo], big)});
      ++lo;
    } else {
      r.certificate.push_back({big});
    }
    --hi;
  }
  r.bins = r.certificate.size();
  return r;
}

std::int64_t size_lower_bound(std::span<const Rational> sizes) { return sum(sizes).ceil(); }

OptResult opt_lower_bound(std::span<const Rational> sizes) {
  return OptResult{static_cast<std::size_t>(size_lower_bound(sizes)), {}, false};
}

Rational weight(const Rational& size) {
  if (size > Rational(1, 2)) return Rational(1);
  if (size > Rational(1, 3)) return Rational(1, 2);
  if (size > Rational(1, 4)) return Rational(1, 3);
  return Rational(0);
}

WeightReport weigh(std::span<const Rational> sizes) {
  WeightReport report;
  for (const auto& s : sizes) {
    report.weights.push_back(weight(s));
    report.total += report.weights.back();
  }
  return report;
}

bool max_bin_weight_check(std::span<const Rational> sizes) {
  if (sum(sizes) > Rational(1)) throw PreconditionViolated("sizes do not fit into a single bin");
  return weigh(sizes).total <= Rational(3, 2);
}

bool competitive_point(std::size_t alg_bins, const OptResult& opt, const Rational& c, std::int64_t K) {
  return Rational(static_cast<std::int64_t>(alg_bins)) <= c * Rational(static_cast<std::int64_t>(opt.bins)) + Rational(K);
}

void verify_certificate(std::span<const Rational> sizes, const OptResult& opt) {
  if (opt.certificate.size() != opt.bins) {
    throw CertificateInfeasible("certificate has " + std::to_string(opt.certificate.size()) + " bins, claims " +
                                std::to_string(opt.bins));
  }
  std::vector<int> seen(sizes.size(), 0);
  for (std::size_t b = 0; b < opt.certificate.size(); ++b) {
    Rational load;
    if (opt.certificate[b].empty()) throw CertificateInfeasible("certificate bin " + std::to_string(b) + " is empty");
    for (std::size_t id : opt.certificate[b]) {
      if (id >= sizes.size()) throw CertificateInfeasible("certificate references unknown item " + std::to_string(id));
      ++seen[id];
      load += sizes[id];
    }
    if (load > Rational(1)) {
      throw CertificateInfeasible("certificate bin " + std::to_string(b) + " has load " + load.str());
    }
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (seen[id] != 1) {
      throw CertificateInfeasible("item " + std::to_string(id) + " appears " + std::to_string(seen[id]) +
                                  " times in the certificate");
    }
  }
}

std::string opt_to_json(const OptResult& opt, int indent) {
  nlohmann::ordered_json j;
  j["bins"] = opt.bins;
  j["exact"] = opt.exact;
  j["certificate"] = opt.certificate;
  return j.dump(indent);
}

}  // namespace binestim
