#include "binestim/adversary.hpp"

#include <array>
#include <string>

#include "binestim/errors.hpp"

namespace binestim {
namespace {
constexpr std::array<std::string_view, 2> kNames = {"fourthirds", "yao4143"};
}

std::span<const std::string_view> adversary_names() { return kNames; }

std::unique_ptr<AdaptiveAdversary> make_adversary(std::string_view name, std::size_t n, const Rational& delta) {
  if (name == "fourthirds") return std::make_unique<FourThirdsAdversary>(n, delta);
  if (name == "yao4143") return std::make_unique<YaoAdversary>(n, delta);
  throw BadParameter("unknown adversary '" + std::string(name) + "'");
}

OptResult adversary_certificate(std::string_view name, const Transcript& transcript) {
  if (name == "fourthirds") return four_thirds_certificate(transcript);
  if (name == "yao4143") return yao_certificate(transcript);
  throw BadParameter("unknown adversary '" + std::string(name) + "'");
}

}  // namespace binestim
