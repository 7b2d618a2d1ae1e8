#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "twostate/ensemble.hpp"

namespace twostate {
namespace {

TEST(Ensemble, OverlapIsSinTheta) {
  for (double t : {0.0, 0.2, kPi / 4, 1.3, kHalfPi}) {
    const TwoStateEnsemble ens(t);
    const auto [a, b] = make_states(ens);
    EXPECT_NEAR(std::abs(inner(a, b)), std::sin(t), 1e-15);
    EXPECT_NEAR(overlap(ens), std::sin(t), 1e-15);
  }
}

TEST(Ensemble, RejectsOutOfRangeTheta) {
  EXPECT_THROW(TwoStateEnsemble(-0.01), std::invalid_argument);
  EXPECT_THROW(TwoStateEnsemble(kHalfPi + 0.01), std::invalid_argument);
  EXPECT_NO_THROW(TwoStateEnsemble(kHalfPi + 1e-13));
}

TEST(Ensemble, SourceEntropyValues) {
  EXPECT_NEAR(source_entropy(TwoStateEnsemble(0.0)), 1.0, 1e-12);
  EXPECT_NEAR(source_entropy(TwoStateEnsemble(kHalfPi)), 0.0, 1e-12);
  // Computed value; the commonly printed 0.907 does not match the formula.
  EXPECT_NEAR(source_entropy(TwoStateEnsemble(kPi / 4)), 0.600876036693, 1e-9);
}

TEST(Ensemble, SourceEntropyIsBinaryEntropyOfEigenvalue) {
  for (int k = 0; k <= 20; ++k) {
    const double t = kHalfPi * k / 20;
    const TwoStateEnsemble ens(t);
    EXPECT_NEAR(source_entropy(ens), binary_entropy((1 + std::sin(t)) / 2), 1e-10);
    EXPECT_NEAR(von_neumann_entropy(ensemble_density(ens)), source_entropy(ens), 1e-10);
  }
}

TEST(Channel, AmplitudesAndValidation) {
  const auto ch = Channel::from_alpha_sq(0.3);
  EXPECT_NEAR(ch.alpha() * ch.alpha() + ch.beta() * ch.beta(), 1.0, 1e-15);
  const auto s = ch.state();
  EXPECT_NEAR(s[0].real(), std::sqrt(0.3), 1e-15);
  EXPECT_NEAR(s[3].real(), std::sqrt(0.7), 1e-15);
  EXPECT_THROW(Channel(0.8), std::invalid_argument);
  EXPECT_THROW(Channel(-0.1), std::invalid_argument);
  EXPECT_NEAR(Channel::maximal().alpha(), Channel::maximal().beta(), 1e-15);
}

}  // namespace
}  // namespace twostate
