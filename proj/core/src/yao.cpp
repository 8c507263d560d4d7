#include <algorithm>
#include <string>

#include "binestim/adversary.hpp"
#include "binestim/errors.hpp"

namespace binestim {
namespace {

const Rational kAnnounced(43, 168);

Rational tiny_size(const Rational& delta) { return kAnnounced * (Rational(1) - delta); }

}  // namespace

Rational yao_epsilon(const Rational& delta) {
  const Rational tiny = tiny_size(delta);
  const Rational upper = min(kAnnounced * (Rational(1) + delta), Rational(1));
  const Rational slacks[] = {
      upper - Rational(1, 2),                                   // 1/2 + eps stays in the band
      (Rational(1, 7) - Rational(12) * tiny) / Rational(6),     // 6 (1/7 + eps) + 12 tiny <= 1
      (Rational(1, 21) - Rational(2) * tiny) / Rational(4),     // 2 (1/7 + 1/3 + 2 eps) + 2 tiny <= 1
      Rational(1, 126),                                         // 1/7 + 1/3 + 1/2 + 3 eps <= 1
  };
  Rational tightest = slacks[0];
  for (const auto& s : slacks) tightest = min(tightest, s);
  if (tightest.sign() <= 0) throw BadParameter("delta " + delta.str() + " leaves no room for the construction");
  return tightest / Rational(2);
}

Announcement yao_announce(std::size_t n, const Rational& delta) {
  if (n == 0 || n % 12 != 0) throw BadParameter("yao4143 needs n divisible by 12, got " + std::to_string(n));
  if (!(delta > Rational(41, 43)) || delta > Rational(1)) {
    throw BadParameter("yao4143 needs 41/43 < delta <= 1, got " + delta.str());
  }
  return Announcement(delta, std::vector<Rational>(3 * n, kAnnounced));
}

YaoAdversary::YaoAdversary(std::size_t n, Rational delta) {
  yao_announce(n, delta);  // validates
  state_.n = n;
  state_.delta = std::move(delta);
  state_.epsilon = yao_epsilon(state_.delta);
  state_.tiny = tiny_size(state_.delta);
}

Announcement YaoAdversary::announce() {
  YaoState fresh;
  fresh.n = state_.n;
  fresh.delta = state_.delta;
  fresh.epsilon = state_.epsilon;
  fresh.tiny = state_.tiny;
  state_ = std::move(fresh);
  return yao_announce(state_.n, state_.delta);
}

std::optional<Rational> YaoAdversary::next(const PackingState& packing) {
  const std::size_t n = state_.n;
  if (state_.emitted >= 3 * n) return std::nullopt;

  if (state_.emitted == n) {
    state_.bins_after_phase1 = packing.bin_count();
    if (4 * packing.bin_count() > n) {
      state_.phase = 4;
      state_.branch = YaoBranch::TinyAfterPhase1;
    } else {
      state_.phase = 2;
    }
  } else if (state_.emitted == 2 * n && state_.phase == 2) {
    state_.bins_after_phase2 = packing.bin_count();
    if (4 * packing.bin_count() > 3 * n) {
      state_.phase = 4;
      state_.branch = YaoBranch::TinyAfterPhase2;
    } else {
      state_.phase = 3;
      state_.branch = YaoBranch::Full;
    }
  }

  ++state_.emitted;
  switch (state_.phase) {
    case 1: return Rational(1, 7) + state_.epsilon;
    case 2: return Rational(1, 3) + state_.epsilon;
    case 3: return Rational(1, 2) + state_.epsilon;
    default: return state_.tiny;
  }
}

void YaoAdversary::observe(const Item&, std::size_t, const PackingState&) {}

Counters YaoAdversary::counters() const {
  return Counters{{"phase", state_.phase},
                  {"branch", state_.branch ? static_cast<std::int64_t>(*state_.branch) : 0},
                  {"bins_after_phase1", static_cast<std::int64_t>(state_.bins_after_phase1)},
                  {"bins_after_phase2", static_cast<std::int64_t>(state_.bins_after_phase2)}};
}

YaoBranch yao_branch(const Transcript& t) {
  const std::size_t n = t.announcement.size() / 3;
  const auto sizes = t.final_state.sizes();
  if (sizes.size() != 3 * n || n == 0) throw CertificateInfeasible("not a completed yao4143 game");
  const Rational tiny_cut(1, 84);
  if (sizes[n] < tiny_cut) return YaoBranch::TinyAfterPhase1;
  if (sizes[2 * n] < tiny_cut) return YaoBranch::TinyAfterPhase2;
  return YaoBranch::Full;
}

OptResult yao_certificate(const Transcript& t) {
  const std::size_t n = t.announcement.size() / 3;
  const YaoBranch branch = yao_branch(t);
  OptResult r;
  r.exact = true;
  switch (branch) {
    case YaoBranch::TinyAfterPhase1:
      // 6 phase-1 items and 12 tiny items per bin.
      for (std::size_t b = 0; b < n / 6; ++b) {
        std::vector<std::size_t> bin;
        for (std::size_t j = 0; j < 6; ++j) bin.push_back(6 * b + j);
        for (std::size_t j = 0; j < 12; ++j) bin.push_back(n + 12 * b + j);
        r.certificate.push_back(std::move(bin));
      }
      break;
    case YaoBranch::TinyAfterPhase2:
      // Two items of each sublist per bin.
      for (std::size_t b = 0; b < n / 2; ++b) {
        r.certificate.push_back({2 * b, 2 * b + 1, n + 2 * b, n + 2 * b + 1, 2 * n + 2 * b, 2 * n + 2 * b + 1});
      }
      break;
    case YaoBranch::Full:
      for (std::size_t b = 0; b < n; ++b) r.certificate.push_back({b, n + b, 2 * n + b});
      break;
  }
  r.bins = r.certificate.size();
  verify_certificate(t.final_state.sizes(), r);
  return r;
}

}  // namespace binestim
