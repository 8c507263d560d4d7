#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "binestim/rational.hpp"

namespace binestim {

/// Bin count for an offline packing. With exact == true, `certificate` is a
/// feasible packing (item indices per bin) that uses exactly `bins` bins;
/// otherwise `bins` is only a lower bound and the certificate may be empty.
struct OptResult {
  std::size_t bins = 0;
  std::vector<std::vector<std::size_t>> certificate;
  bool exact = false;
};

inline constexpr std::size_t kDefaultExactLimit = 20;

/// Exact minimum by depth-first branch-and-bound over items in descending
/// size. Throws InstanceTooLarge when sizes.size() > limit.
OptResult opt_exact(std::span<const Rational> sizes, std::size_t limit = kDefaultExactLimit);

/// True when no three items fit together (n < 3, or the three smallest sum to more than 1).
bool admits_at_most_two_per_bin(std::span<const Rational> sizes);

/// Exact minimum for instances with at most two items per bin, via the
/// ascending two-pointer matching on the compatibility a + b <= 1.
/// Throws PreconditionViolated when three items could share a bin.
OptResult opt_pairing(std::span<const Rational> sizes);

/// ceil(sum of sizes).
std::int64_t size_lower_bound(std::span<const Rational> sizes);
/// size_lower_bound packaged as a non-exact OptResult.
OptResult opt_lower_bound(std::span<const Rational> sizes);

/// 1, 1/2, 1/3 on (1/2,1], (1/3,1/2], (1/4,1/3]; 0 on (0,1/4].
Rational weight(const Rational& size);

struct WeightReport {
  std::vector<Rational> weights;
  Rational total;
};
WeightReport weigh(std::span<const Rational> sizes);

/// True iff the total weight of one feasible bin is at most 3/2.
/// Throws PreconditionViolated when the sizes do not fit into one bin.
bool max_bin_weight_check(std::span<const Rational> sizes);

/// alg_bins <= c * opt.bins + K.
bool competitive_point(std::size_t alg_bins, const OptResult& opt, const Rational& c, std::int64_t K);

/// Throws CertificateInfeasible unless the certificate covers every item
/// exactly once, uses opt.bins bins and no bin exceeds capacity 1.
void verify_certificate(std::span<const Rational> sizes, const OptResult& opt);

/// {"bins": ..., "exact": ..., "certificate": [[ids...], ...]}
std::string opt_to_json(const OptResult& opt, int indent = 2);

}  // namespace binestim
