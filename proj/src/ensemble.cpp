#include "twostate/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twostate {

namespace {
constexpr double kDomainSlack = 1e-12;
}

TwoStateEnsemble::TwoStateEnsemble(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || theta < -kDomainSlack || theta > kHalfPi + kDomainSlack) {
    throw std::invalid_argument("theta must lie in [0, pi/2], got " + std::to_string(theta));
  }
  theta_ = std::clamp(theta, 0.0, kHalfPi);
}

Channel::Channel(double alpha) : alpha_(alpha), beta_(0.0) {
  const double max_alpha = 1.0 / std::sqrt(2.0);
  if (!std::isfinite(alpha) || alpha < -kDomainSlack || alpha > max_alpha + kDomainSlack) {
    throw std::invalid_argument("channel alpha must lie in [0, 1/sqrt(2)], got " +
                                std::to_string(alpha));
  }
  alpha_ = std::clamp(alpha, 0.0, max_alpha);
  beta_ = std::sqrt(1.0 - alpha_ * alpha_);
}

Channel Channel::from_alpha_sq(double alpha_sq) {
  if (!(alpha_sq >= -kDomainSlack && alpha_sq <= 0.5 + kDomainSlack)) {
    throw std::invalid_argument("channel alpha^2 must lie in [0, 1/2]");
  }
  return Channel(std::sqrt(std::clamp(alpha_sq, 0.0, 0.5)));
}

Channel Channel::maximal() { return Channel(1.0 / std::sqrt(2.0)); }

PureState Channel::state() const {
  Vector v = Vector::Zero(4);
  v(0) = alpha_;
  v(3) = beta_;
  return PureState::normalized(2, std::move(v));
}

std::pair<PureState, PureState> make_states(const TwoStateEnsemble& ens) {
  const double c = std::cos(ens.theta() / 2);
  const double s = std::sin(ens.theta() / 2);
  Vector v1(2), v2(2);
  v1 << c, s;
  v2 << s, c;
  return {PureState::normalized(1, std::move(v1)), PureState::normalized(1, std::move(v2))};
}

double overlap(const TwoStateEnsemble& ens) { return std::sin(ens.theta()); }

DensityMatrix ensemble_density(const TwoStateEnsemble& ens) {
  const auto [psi1, psi2] = make_states(ens);
  const Matrix rho = 0.5 * (DensityMatrix::projector(psi1).elements() +
                            DensityMatrix::projector(psi2).elements());
  return DensityMatrix(1, rho);
}

double source_entropy(const TwoStateEnsemble& ens) {
  return von_neumann_entropy(ensemble_density(ens));
}

}  // namespace twostate
