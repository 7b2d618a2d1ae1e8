#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "twostate/channel_strats.hpp"
#include "twostate/protocol_sim.hpp"
#include "twostate/random_states.hpp"

namespace twostate {
namespace {

TEST(Protocol, PerfectChannelTeleportsRandomInputs) {
  const auto spec = standard_teleportation(Channel::maximal().state());
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto input = random_state(1, rng);
    for (const auto& o : enumerate_protocol(input, spec)) {
      EXPECT_NEAR(o.probability, 0.25, 1e-12);
      EXPECT_NEAR(o.fidelity, 1.0, 1e-12);
    }
  }
}

TEST(Protocol, PerfectChannelCorrectedAmplitudesAreExact) {
  const auto spec = standard_teleportation(Channel::maximal().state());
  Rng rng(6);
  const auto input = random_state(1, rng);
  for (const auto& o : enumerate_protocol(input, spec)) {
    const Vector diff = o.corrected_state.amplitudes() - input.amplitudes();
    EXPECT_LT(diff.norm(), 1e-12) << "outcome " << static_cast<int>(o.index);
  }
}

TEST(Protocol, FirstOutcomeProbability) {
  const auto ch = Channel::from_alpha_sq(0.3);
  const auto [psi1, psi2] = make_states(TwoStateEnsemble(kPi / 4));
  const auto outcomes = enumerate_protocol(psi1, standard_teleportation(ch.state()));
  EXPECT_NEAR(outcomes[0].probability, 0.179289321881, 1e-10);
}

TEST(Protocol, EnumerationMatchesClosedFormOnGrid) {
  for (double a2 : {0.0, 0.1, 0.3, 0.5}) {
    const auto ch = Channel::from_alpha_sq(a2);
    const auto spec = standard_teleportation(ch.state());
    for (double t : {0.0, 0.3, kPi / 4, 1.2, kHalfPi}) {
      for (double phi : {0.0, 1.0, 2.5}) {
        const double f = enumerate_protocol_fidelity(PureState::bloch(t, phi), spec);
        EXPECT_NEAR(f, direct_fidelity_state(t, ch), 1e-12);
      }
      EXPECT_NEAR(enumerate_ensemble_fidelity(TwoStateEnsemble(t), spec),
                  two_state_direct_fidelity(TwoStateEnsemble(t), ch), 1e-12);
    }
  }
}

TEST(Protocol, PauliDesignGivesExactHaarAverage) {
  for (double a2 : {0.0, 0.2, 0.3, 0.5}) {
    const auto ch = Channel::from_alpha_sq(a2);
    EXPECT_NEAR(design_average_protocol_fidelity(standard_teleportation(ch.state())),
                average_fidelity_direct(ch), 1e-12);
  }
}

TEST(Protocol, HaarMonteCarloWithinFourStandardErrors) {
  const auto ch = Channel::from_alpha_sq(0.3);
  const auto est = mc_haar_protocol_fidelity(standard_teleportation(ch.state()), 200'000, RngSeed{9});
  EXPECT_NEAR(est.mean, 0.972171712997, 4 * est.std_error);
}

TEST(Protocol, OutcomeMonteCarloWithinFourStandardErrors) {
  const auto ch = Channel::from_alpha_sq(0.1);
  const auto spec = standard_teleportation(ch.state());
  const auto input = PureState::bloch(0.7, 0.3);
  const auto est = mc_protocol_fidelity(input, spec, 1'000'000, RngSeed{13});
  EXPECT_GT(est.std_error, 0.0);
  EXPECT_NEAR(est.mean, enumerate_protocol_fidelity(input, spec), 4 * est.std_error);
  EXPECT_THROW(mc_protocol_fidelity(input, spec, 99, RngSeed{}), std::invalid_argument);
}

TEST(Protocol, MissingCorrectionIsAnError) {
  auto spec = standard_teleportation(Channel::maximal().state());
  spec.corrections.erase(BellIndex::kPsiMinus);
  EXPECT_THROW(enumerate_protocol(PureState::basis(1, 0), spec), std::invalid_argument);
}

TEST(Protocol, StandardCorrectionsArePaulis) {
  EXPECT_TRUE(standard_correction(BellIndex::kPhiPlus).isApprox(gates::identity()));
  EXPECT_TRUE(standard_correction(BellIndex::kPhiMinus).isApprox(gates::pauli_z()));
  EXPECT_TRUE(standard_correction(BellIndex::kPsiPlus).isApprox(gates::pauli_x()));
  EXPECT_TRUE(standard_correction(BellIndex::kPsiMinus).isApprox(gates::pauli_z() * gates::pauli_x()));
}

TEST(Protocol, ClassicalEnumerationMatchesClosedForms) {
  for (double t : {0.0, 0.4, kPi / 4, 1.3, kHalfPi}) {
    const TwoStateEnsemble ens(t);
    EXPECT_NEAR(enumerate_classical_strategy(optimized_strategy(ens), ens), fidelity_optimized(ens).fidelity,
                1e-12);
    EXPECT_NEAR(enumerate_classical_strategy(unambiguous_strategy(ens), ens), fidelity_unambiguous(ens), 1e-12);
    EXPECT_NEAR(enumerate_classical_strategy(min_error_strategy(ens), ens), fidelity_min_error(ens), 1e-12);
  }
}

TEST(Protocol, FilterSuccessAndOutput) {
  const auto ch = Channel::from_alpha_sq(0.2);
  const auto full = procrustean_filter(ch, 1 / std::sqrt(2.0));
  EXPECT_NEAR(full.success_probability, 0.4, 1e-14);
  EXPECT_NEAR(std::abs(full.filtered[0]), std::sqrt(0.5), 1e-14);
  const auto partial = procrustean_filter(ch, std::sqrt(0.35));
  EXPECT_NEAR(partial.success_probability, 0.2 / 0.35, 1e-14);
  EXPECT_NEAR(std::abs(partial.filtered[0]), std::sqrt(0.35), 1e-14);
  EXPECT_NEAR(std::abs(partial.filtered[3]), std::sqrt(0.65), 1e-14);
}

TEST(Protocol, PurificationSimulationMatchesClosedForm) {
  for (double a2 : {0.0, 0.1, 0.3}) {
    const auto ch = Channel::from_alpha_sq(a2);
    for (double t : {0.2, kPi / 4, 1.3}) {
      const TwoStateEnsemble ens(t);
      EXPECT_NEAR(simulate_purification_branch(ens, ch), purification_fidelity_two_state(ens, ch), 1e-12);
      const double ap = std::sqrt((a2 + 0.5) / 2);
      EXPECT_NEAR(simulate_partial_purification(ens, ch, ap), combined_fidelity(ens, ch, ap), 1e-12);
    }
  }
}

}  // namespace
}  // namespace twostate
