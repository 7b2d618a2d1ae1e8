#include "twostate/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace twostate {

namespace {

constexpr double kPovmElementTolerance = 1e-12;
constexpr double kPovmSumTolerance = 1e-10;

Matrix2 projector(const PureState& psi) {
  return psi.amplitudes() * psi.amplitudes().adjoint();
}

PureState real_qubit(double c0, double c1) {
  Vector v(2);
  v << c0, c1;
  return PureState::normalized(1, std::move(v));
}

}  // namespace

ClassicalStrategy::ClassicalStrategy(std::vector<Matrix2> povm, std::vector<PureState> guesses)
    : povm_(std::move(povm)), guesses_(std::move(guesses)) {
  if (povm_.empty()) throw std::invalid_argument("POVM must have at least one element");
  if (povm_.size() != guesses_.size()) {
    throw std::invalid_argument("one guess is required per POVM element");
  }
  Matrix2 sum = Matrix2::Zero();
  for (const auto& a : povm_) {
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > kPovmElementTolerance) {
      throw std::invalid_argument("POVM element is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix2> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPovmElementTolerance) {
      throw std::invalid_argument("POVM element is not positive");
    }
    sum += a;
  }
  if ((sum - Matrix2::Identity()).cwiseAbs().maxCoeff() > kPovmSumTolerance) {
    throw std::invalid_argument("POVM elements do not sum to the identity");
  }
  for (const auto& g : guesses_) {
    if (g.n_qubits() != 1) throw std::invalid_argument("guesses must be single-qubit states");
  }
}

double classical_fidelity(const ClassicalStrategy& strategy, const TwoStateEnsemble& ens) {
  const auto [psi1, psi2] = make_states(ens);
  double f = 0.0;
  for (const PureState* psi : {&psi1, &psi2}) {
    const Vector& v = psi->amplitudes();
    for (std::size_t i = 0; i < strategy.size(); ++i) {
      const double p = v.dot(strategy.povm()[i] * v).real();
      f += p * std::norm(inner(*psi, strategy.guesses()[i]));
    }
  }
  return 0.5 * f;
}

double min_error_probability(const TwoStateEnsemble& ens) {
  return 0.5 * (1.0 - std::cos(ens.theta()));
}

double fidelity_min_error(const TwoStateEnsemble& ens) {
  const double c = std::cos(ens.theta());
  return 1.0 - 0.5 * (1.0 - c) * c * c;
}

double unambiguous_success_probability(const TwoStateEnsemble& ens) {
  return 1.0 - overlap(ens);
}

double fidelity_unambiguous(const TwoStateEnsemble& ens) {
  const double s = overlap(ens);
  return 1.0 - 0.5 * s + 0.5 * s * s * s;
}

double guess_fidelity(const TwoStateEnsemble& ens, double guess_angle) {
  const double t = ens.theta();
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double right = std::cos((t - guess_angle) / 2);
  const double wrong = std::sin((t + guess_angle) / 2);
  return c * c * right * right + s * s * wrong * wrong;
}

double guess_fidelity_derivative(const TwoStateEnsemble& ens, double guess_angle) {
  const double t = ens.theta();
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  return 0.5 * (c * c * std::sin(t - guess_angle) + s * s * std::sin(t + guess_angle));
}

double optimal_guess_angle(const TwoStateEnsemble& ens) {
  const double t = ens.theta();
  const double c = std::cos(t);
  if (t >= kHalfPi || c * c == 0.0) {
    throw std::domain_error("optimal guess angle is undefined for identical states (theta = pi/2)");
  }
  return std::atan(std::sin(t) / (c * c));
}

StrategyReport fidelity_optimized(const TwoStateEnsemble& ens) {
  StrategyReport report;
  report.error_probability = min_error_probability(ens);
  if (ens.theta() >= kHalfPi) {
    // Limit of the guess angle as theta -> pi/2.
    report.guess_angle = kHalfPi;
  } else {
    report.guess_angle = optimal_guess_angle(ens);
  }
  report.fidelity = guess_fidelity(ens, *report.guess_angle);
  return report;
}

double fidelity_fuchs_peres(const TwoStateEnsemble& ens) {
  const double s2 = std::pow(overlap(ens), 2);
  return 0.5 * (1.0 + std::sqrt(1.0 - s2 + s2 * s2));
}

ClassicalStrategy guess_strategy(double guess_angle) {
  const PureState zero = PureState::basis(1, 0);
  const PureState one = PureState::basis(1, 1);
  const double c = std::cos(guess_angle / 2), s = std::sin(guess_angle / 2);
  return ClassicalStrategy({projector(zero), projector(one)}, {real_qubit(c, s), real_qubit(s, c)});
}

ClassicalStrategy min_error_strategy(const TwoStateEnsemble& ens) {
  return guess_strategy(ens.theta());
}

ClassicalStrategy optimized_strategy(const TwoStateEnsemble& ens) {
  return guess_strategy(*fidelity_optimized(ens).guess_angle);
}

ClassicalStrategy unambiguous_strategy(const TwoStateEnsemble& ens) {
  const auto [psi1, psi2] = make_states(ens);
  const double c = std::cos(ens.theta() / 2), s = std::sin(ens.theta() / 2);
  // perp2 is orthogonal to psi2, so its click certifies psi1 (and vice versa).
  const PureState perp2 = real_qubit(c, -s);
  const PureState perp1 = real_qubit(s, -c);
  const double weight = 1.0 / (1.0 + overlap(ens));
  const Matrix2 a1 = weight * projector(perp2);
  const Matrix2 a2 = weight * projector(perp1);
  const Matrix2 inconclusive = Matrix2::Identity() - a1 - a2;
  return ClassicalStrategy({a1, a2, 0.5 * inconclusive, 0.5 * inconclusive},
                           {psi1, psi2, psi1, psi2});
}

MeanEstimate unknown_state_classical_fidelity(std::size_t samples, RngSeed seed,
                                              InputDistribution dist, Execution ex) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  auto sample = [dist](Rng& rng) {
    // Outcome k of the Z measurement occurs with |<k|psi>|^2 and Bob prepares
    // |k>, so the conditional fidelity is |<0|psi>|^4 + |<1|psi>|^4.
    double p0 = 1.0;
    if (dist == InputDistribution::kHaar) {
      // cos of the polar angle is uniform on [-1, 1]; the azimuth drops out.
      const double z = 2.0 * rng.uniform() - 1.0;
      p0 = 0.5 * (1.0 + z);
    }
    return p0 * p0 + (1.0 - p0) * (1.0 - p0);
  };
  return mc_mean(samples, seed, sample, ex);
}

}  // namespace twostate
