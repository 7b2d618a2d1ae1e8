#include "twostate/channel_strats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twostate/optimize.hpp"

namespace twostate {

namespace {
const double kMaxAlpha = 1.0 / std::sqrt(2.0);
constexpr double kAlphaSlack = 1e-12;
constexpr double kAlphaPrimeTolerance = 1e-9;
}  // namespace

double direct_fidelity_state(double theta, const Channel& channel) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2), st = std::sin(theta);
  return std::pow(c, 4) + std::pow(s, 4) + channel.alpha() * channel.beta() * st * st;
}

double average_fidelity_direct(const Channel& channel) {
  return 2.0 / 3.0 * (1.0 + channel.alpha() * channel.beta());
}

double singlet_fraction(const Channel& channel) {
  return 0.5 * (1.0 + 2.0 * channel.alpha() * channel.beta());
}

double horodecki_optimal_fidelity(const Channel& channel) {
  return (2.0 * singlet_fraction(channel) + 1.0) / 3.0;
}

double two_state_direct_fidelity(const TwoStateEnsemble& ens, const Channel& channel) {
  return direct_fidelity_state(ens.theta(), channel);
}

double purification_fidelity_unknown(const Channel& channel) {
  return 2.0 / 3.0 * (1.0 + channel.alpha() * channel.alpha());
}

double purification_fidelity_two_state(const TwoStateEnsemble& ens, const Channel& channel) {
  const double success = 2.0 * channel.alpha() * channel.alpha();
  return success + (1.0 - success) * fidelity_optimized(ens).fidelity;
}

double partial_purification_success(const Channel& channel, double alpha_prime) {
  if (!(alpha_prime >= channel.alpha() - kAlphaSlack && alpha_prime <= kMaxAlpha + kAlphaSlack)) {
    throw std::invalid_argument("alpha' must lie in [alpha, 1/sqrt(2)]");
  }
  if (alpha_prime <= channel.alpha()) return 1.0;
  const double r = channel.alpha() / alpha_prime;
  return r * r;
}

double combined_fidelity(const TwoStateEnsemble& ens, const Channel& channel, double alpha_prime) {
  const double success = partial_purification_success(channel, alpha_prime);
  const Channel target(std::max(alpha_prime, channel.alpha()));
  return success * two_state_direct_fidelity(ens, target) +
         (1.0 - success) * fidelity_optimized(ens).fidelity;
}

ChannelStrategyReport optimize_combined(const TwoStateEnsemble& ens, const Channel& channel) {
  const double lo = channel.alpha();
  const double hi = kMaxAlpha;
  auto f = [&](double a) { return combined_fidelity(ens, channel, a); };

  ChannelStrategyReport best;
  best.method = ChannelMethod::kCombined;
  best.alpha_prime = lo;
  best.fidelity = f(lo);
  auto consider = [&](double a, double value) {
    if (value > best.fidelity) {
      best.fidelity = value;
      best.alpha_prime = a;
    }
  };
  consider(hi, f(hi));
  if (hi - lo > kAlphaPrimeTolerance) {
    // The objective is concave in 1/alpha'^2, hence unimodal in alpha'. An
    // interior point must beat both endpoints by more than rounding, otherwise
    // a flat objective (alpha = 0) would report an arbitrary alpha'.
    const ScalarMax inner = golden_section_maximize(f, lo, hi, kAlphaPrimeTolerance);
    if (inner.value > best.fidelity + 1e-15) {
      best.fidelity = inner.value;
      best.alpha_prime = inner.x;
    }
  }
  return best;
}

}  // namespace twostate
