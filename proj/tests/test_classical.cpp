#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "twostate/classical.hpp"

namespace twostate {
namespace {

// Independent evaluation of the basis-measurement fidelity with a tilted guess.
double guess_oracle(double t, double g) {
  const double c = std::cos(t / 2), s = std::sin(t / 2);
  const double p11 = c * c, p21 = s * s;
  const double f11 = std::pow(std::cos((t - g) / 2), 2);
  const double f21 = std::pow(std::sin((t + g) / 2), 2);
  return p11 * f11 + p21 * f21;
}

TEST(Classical, MinErrorAtQuarterPi) {
  EXPECT_NEAR(fidelity_min_error(TwoStateEnsemble(kPi / 4)), 0.926776695297, 1e-9);
}

TEST(Classical, UnambiguousAtQuarterPi) {
  // 1 - s/2 + s^3/2 with s = sin(pi/4).
  EXPECT_NEAR(fidelity_unambiguous(TwoStateEnsemble(kPi / 4)), 0.823223304703, 1e-9);
}

TEST(Classical, OptimizedAtQuarterPi) {
  const auto r = fidelity_optimized(TwoStateEnsemble(kPi / 4));
  EXPECT_NEAR(r.fidelity, 0.933012701892, 1e-9);
  ASSERT_TRUE(r.guess_angle.has_value());
  EXPECT_NEAR(*r.guess_angle, std::atan(std::sqrt(2.0)), 1e-12);
}

TEST(Classical, OptimalGuessAngleValues) {
  EXPECT_NEAR(optimal_guess_angle(TwoStateEnsemble(0.3)), 0.313144541677, 1e-9);
  EXPECT_NEAR(optimal_guess_angle(TwoStateEnsemble(kPi / 4)), 0.955316618125, 1e-9);
  EXPECT_THROW(optimal_guess_angle(TwoStateEnsemble(kHalfPi)), std::domain_error);
}

TEST(Classical, OptimalGuessAngleBeatsBruteForceGrid) {
  for (double t : {0.1, 0.3, 0.7, 1.0, 1.4}) {
    const TwoStateEnsemble ens(t);
    double best = -1, best_g = 0;
    for (int k = 0; k <= 200000; ++k) {
      const double g = kHalfPi * k / 200000;
      const double f = guess_oracle(t, g);
      if (f > best) best = f, best_g = g;
    }
    EXPECT_NEAR(optimal_guess_angle(ens), best_g, 1e-5) << "theta=" << t;
    EXPECT_NEAR(fidelity_optimized(ens).fidelity, best, 1e-10);
  }
}

TEST(Classical, DerivativeMatchesFiniteDifference) {
  const TwoStateEnsemble ens(0.9);
  for (double g : {0.0, 0.4, 1.1}) {
    const double h = 1e-6;
    const double fd = (guess_fidelity(ens, g + h) - guess_fidelity(ens, g - h)) / (2 * h);
    EXPECT_NEAR(guess_fidelity_derivative(ens, g), fd, 1e-8);
  }
  EXPECT_NEAR(guess_fidelity_derivative(ens, optimal_guess_angle(ens)), 0.0, 1e-12);
}

TEST(Classical, GuessFidelityMatchesOracle) {
  for (double t : {0.0, 0.5, 1.2})
    for (double g : {0.0, 0.3, 1.5}) EXPECT_NEAR(guess_fidelity(TwoStateEnsemble(t), g), guess_oracle(t, g), 1e-14);
}

TEST(Classical, OrthogonalAndIdenticalLimits) {
  const TwoStateEnsemble ortho(0.0), same(kHalfPi);
  EXPECT_NEAR(fidelity_min_error(ortho), 1.0, 1e-14);
  EXPECT_NEAR(fidelity_unambiguous(ortho), 1.0, 1e-14);
  EXPECT_NEAR(fidelity_optimized(ortho).fidelity, 1.0, 1e-14);
  EXPECT_NEAR(fidelity_optimized(same).fidelity, 1.0, 1e-14);
  EXPECT_NEAR(fidelity_fuchs_peres(same), 1.0, 1e-14);
  EXPECT_NEAR(min_error_probability(same), 0.5, 1e-14);
  EXPECT_NEAR(unambiguous_success_probability(same), 0.0, 1e-14);
}

TEST(Classical, OrderingSymmetryAndFuchsPeresAcrossGrid) {
  for (int k = 0; k <= 180; ++k) {
    const double t = kHalfPi * k / 180;
    const TwoStateEnsemble ens(t);
    const double fu = fidelity_unambiguous(ens), fm = fidelity_min_error(ens);
    const double fo = fidelity_optimized(ens).fidelity;
    EXPECT_LE(fu, fm + 1e-12);
    EXPECT_LE(fm, fo + 1e-12);
    EXPECT_NEAR(fo, fidelity_fuchs_peres(ens), 1e-9);
    EXPECT_NEAR(fo, fidelity_optimized(TwoStateEnsemble(kHalfPi - t)).fidelity, 1e-9);
  }
}

TEST(Classical, ExplicitStrategiesMatchClosedForms) {
  for (double t : {0.0, 0.3, kPi / 4, 1.2, kHalfPi}) {
    const TwoStateEnsemble ens(t);
    EXPECT_NEAR(classical_fidelity(min_error_strategy(ens), ens), fidelity_min_error(ens), 1e-12);
    EXPECT_NEAR(classical_fidelity(unambiguous_strategy(ens), ens), fidelity_unambiguous(ens), 1e-12);
    EXPECT_NEAR(classical_fidelity(optimized_strategy(ens), ens), fidelity_optimized(ens).fidelity, 1e-12);
  }
}

TEST(Classical, BasisGuessesGiveThreeQuarters) {
  const TwoStateEnsemble ens(kPi / 4);
  EXPECT_NEAR(classical_fidelity(guess_strategy(0.0), ens), 0.75, 1e-12);
}

TEST(Classical, StrategyValidation) {
  Matrix2 half = Matrix2::Identity() / 2;
  EXPECT_THROW(ClassicalStrategy({half}, {PureState::basis(1, 0)}), std::invalid_argument);
  EXPECT_THROW(ClassicalStrategy({half, half}, {PureState::basis(1, 0)}), std::invalid_argument);
  EXPECT_THROW(ClassicalStrategy({half, half}, {PureState::basis(1, 0), PureState::basis(2, 0)}),
               std::invalid_argument);
  Matrix2 neg;
  neg << 1.5, 0, 0, 0.5;
  Matrix2 rest = Matrix2::Identity() - neg;
  EXPECT_THROW(ClassicalStrategy({neg, rest}, {PureState::basis(1, 0), PureState::basis(1, 1)}),
               std::invalid_argument);
  EXPECT_NO_THROW(ClassicalStrategy({half, half}, {PureState::basis(1, 0), PureState::basis(1, 1)}));
}

TEST(Classical, UnknownStateMeasureAndPrepare) {
  const auto haar = unknown_state_classical_fidelity(1'000'000, RngSeed{42});
  EXPECT_NEAR(haar.mean, 2.0 / 3.0, 4 * haar.std_error);
  EXPECT_LT(haar.std_error, 1e-3);
  const auto zero = unknown_state_classical_fidelity(1000, RngSeed{1}, InputDistribution::kBasisZero);
  EXPECT_NEAR(zero.mean, 1.0, 1e-15);
}

}  // namespace
}  // namespace twostate
