#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "twostate/qcore.hpp"
#include "twostate/random_states.hpp"

namespace twostate {
namespace {

Vector vec(std::initializer_list<Complex> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

PureState bell_state(BellIndex idx) {
  const auto a = bell_vector(idx);
  return PureState(2, vec({a[0], a[1], a[2], a[3]}));
}

TEST(PureState, RejectsUnnormalizedAndWrongDimension) {
  EXPECT_THROW(PureState(1, vec({1.0, 1.0})), std::invalid_argument);
  EXPECT_THROW(PureState(2, vec({1.0, 0.0})), std::invalid_argument);
  EXPECT_THROW(PureState::normalized(1, vec({0.0, 0.0})), std::invalid_argument);
  EXPECT_NO_THROW(PureState(1, vec({1.0, 0.0})));
}

TEST(PureState, BlochParametrization) {
  const auto s = PureState::bloch(1.0, 0.5);
  EXPECT_NEAR(std::abs(s[0]), std::cos(0.5), 1e-15);
  EXPECT_NEAR(std::abs(s[1]), std::sin(0.5), 1e-15);
  EXPECT_NEAR(std::arg(s[1]), 0.5, 1e-15);
}

TEST(PureState, ZeroQubitStateIsAScalar) {
  const PureState s(0, vec({1.0}));
  EXPECT_EQ(s.dim(), 1u);
}

TEST(DensityMatrix, ValidatesHermiticityTraceAndPositivity) {
  Matrix m(2, 2);
  m << 0.5, 0.1, 0.2, 0.5;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
  m << 0.6, 0.0, 0.0, 0.6;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
  m << 1.2, 0.0, 0.0, -0.2;
  EXPECT_THROW(DensityMatrix(1, m), std::invalid_argument);
  m << 0.5, 0.5, 0.5, 0.5;
  EXPECT_NO_THROW(DensityMatrix(1, m));
}

TEST(BellBasis, OrthonormalAndOrdered) {
  for (auto i : kBellIndices) {
    for (auto j : kBellIndices) {
      const double ov = std::abs(inner(bell_state(i), bell_state(j)));
      EXPECT_NEAR(ov, i == j ? 1.0 : 0.0, 1e-15);
    }
  }
  const auto psi_minus = bell_vector(BellIndex::kPsiMinus);
  EXPECT_NEAR(psi_minus[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi_minus[2].real(), -1 / std::sqrt(2.0), 1e-15);
}

TEST(Entropy, BellStateHalvesAreMaximallyMixed) {
  const auto rho = DensityMatrix::projector(bell_state(BellIndex::kPhiPlus));
  const auto half = partial_trace(rho, {0});
  EXPECT_NEAR(half(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(half(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(half), 1.0, 1e-12);
}

TEST(Entropy, PureAndMixedLimits) {
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::projector(PureState::basis(3, 5))), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(3)), 3.0, 1e-12);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
}

TEST(Entropy, SchmidtSpectrumMatchesBinaryEntropy) {
  const double a = 0.3;
  const PureState s(2, vec({a, 0.0, 0.0, std::sqrt(1 - a * a)}));
  EXPECT_NEAR(von_neumann_entropy(reduced_density(s, {1})), binary_entropy(a * a), 1e-12);
}

TEST(PartialTrace, RejectsBadKeepSets) {
  const auto rho = DensityMatrix::maximally_mixed(2);
  EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {0, 1}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {2}), std::invalid_argument);
}

TEST(PartialTrace, AgreesWithPureStateReduction) {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_state(3, rng);
    const auto a = partial_trace(DensityMatrix::projector(psi), {0, 2});
    const auto b = reduced_density(psi, {0, 2});
    EXPECT_LT((a.elements() - b.elements()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PartialTrace, ProductStateFactorsOut) {
  Rng rng(11);
  const auto x = random_state(1, rng);
  const auto y = random_state(2, rng);
  const auto r = reduced_density(tensor(x, y), {0});
  EXPECT_NEAR(fidelity(x, r), 1.0, 1e-14);
}

TEST(BellMeasure, ProbabilitiesSumToOneOnRandomStates) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = random_state(3, rng);
    const auto outcomes = bell_measure(psi, {0, 2});
    double total = 0.0;
    for (const auto& o : outcomes) total += o.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(BellMeasure, RejectsInvalidPairs) {
  const auto psi = PureState::basis(3, 0);
  EXPECT_THROW(bell_measure(psi, {1, 1}), std::invalid_argument);
  EXPECT_THROW(bell_measure(psi, {0, 3}), std::invalid_argument);
}

TEST(BellMeasure, BellStateGivesDeterministicOutcome) {
  const auto outcomes = bell_measure(bell_state(BellIndex::kPsiPlus), {0, 1});
  EXPECT_NEAR(outcomes[2].probability, 1.0, 1e-14);
  EXPECT_EQ(outcomes[2].post_state.n_qubits(), 0);
  EXPECT_NEAR(outcomes[0].probability, 0.0, 1e-14);
}

TEST(LocalOperator, RejectsNonUnitaryFactors) {
  Matrix2 m;
  m << 1, 0, 0, 2;
  EXPECT_THROW(LocalOperator({m}), std::invalid_argument);
}

TEST(LocalOperator, PreservesEntropyOfEveryCut) {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_state(3, rng);
    const auto u = random_local_operator(3, rng);
    const auto phi = apply_local(u, psi);
    for (int q = 0; q < 3; ++q) {
      EXPECT_NEAR(von_neumann_entropy(reduced_density(psi, {q})),
                  von_neumann_entropy(reduced_density(phi, {q})), 1e-10);
    }
  }
}

TEST(ApplySingleQubit, ActsOnTheRequestedQubit) {
  const auto psi = PureState::basis(2, 0);  // |00>
  const Vector out = apply_single_qubit(gates::pauli_x(), 1, 2, psi.amplitudes());
  EXPECT_NEAR(std::abs(out(1)), 1.0, 1e-15);  // |01>
}

TEST(Fidelity, RangeAndOrthogonality) {
  const auto zero = PureState::basis(1, 0);
  EXPECT_NEAR(fidelity(zero, DensityMatrix::projector(zero)), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(zero, DensityMatrix::projector(PureState::basis(1, 1))), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(zero, DensityMatrix::maximally_mixed(1)), 0.5, 1e-15);
}

}  // namespace
}  // namespace twostate
