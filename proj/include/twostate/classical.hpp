#pragma once

// Transmission of the two-state ensemble with classical communication only:
// Alice measures a POVM, sends the outcome, Bob prepares a guess.

#include <cstddef>
#include <optional>
#include <vector>

#include "twostate/ensemble.hpp"
#include "twostate/parallel.hpp"
#include "twostate/qcore.hpp"
#include "twostate/rng.hpp"

namespace twostate {

/// POVM on one qubit with one guessed output state per element.
class ClassicalStrategy {
 public:
  ClassicalStrategy(std::vector<Matrix2> povm, std::vector<PureState> guesses);

  const std::vector<Matrix2>& povm() const { return povm_; }
  const std::vector<PureState>& guesses() const { return guesses_; }
  std::size_t size() const { return povm_.size(); }

 private:
  std::vector<Matrix2> povm_;
  std::vector<PureState> guesses_;
};

struct StrategyReport {
  double fidelity = 0.0;
  std::optional<double> error_probability;
  std::optional<double> guess_angle;
};

/// (1/2) sum_i sum_j <psi_j|A_i|psi_j> |<psi_j|guess_i>|^2
double classical_fidelity(const ClassicalStrategy& strategy, const TwoStateEnsemble& ens);

/// Helstrom bound for the ensemble: (1 - cos theta) / 2.
double min_error_probability(const TwoStateEnsemble& ens);

/// Min-error measurement, Bob prepares the indicated signal state.
double fidelity_min_error(const TwoStateEnsemble& ens);

/// Unambiguous discrimination, random guess on the inconclusive outcome.
double fidelity_unambiguous(const TwoStateEnsemble& ens);
double unambiguous_success_probability(const TwoStateEnsemble& ens);

/// Fidelity of the computational-basis measurement when Bob prepares
/// cos(g/2)|0> + sin(g/2)|1> on outcome 0 and its 0<->1 mirror on outcome 1:
/// cos^2(t/2) cos^2((t-g)/2) + sin^2(t/2) sin^2((t+g)/2).
double guess_fidelity(const TwoStateEnsemble& ens, double guess_angle);

/// d/dg of guess_fidelity, i.e. (1/2)[p(1|psi1) sin(t-g) + p(2|psi1) sin(t+g)].
double guess_fidelity_derivative(const TwoStateEnsemble& ens, double guess_angle);

/// arctan(sin t / cos^2 t). Throws std::domain_error at t = pi/2, where the
/// two states coincide and the stationarity condition degenerates.
double optimal_guess_angle(const TwoStateEnsemble& ens);

/// Best known classical strategy: min-error measurement with the biased
/// guess. Not proven optimal; it coincides with the Fuchs-Peres expression.
StrategyReport fidelity_optimized(const TwoStateEnsemble& ens);

/// (1/2)(1 + sqrt(1 - s^2 + s^4)) with s = |<psi1|psi2>|.
double fidelity_fuchs_peres(const TwoStateEnsemble& ens);

// Explicit strategies, for evaluation by classical_fidelity or by the
// protocol enumerator.
ClassicalStrategy min_error_strategy(const TwoStateEnsemble& ens);
ClassicalStrategy guess_strategy(double guess_angle);
ClassicalStrategy optimized_strategy(const TwoStateEnsemble& ens);
/// Four elements: the two conclusive elements plus the inconclusive element
/// split in half, one half per random guess.
ClassicalStrategy unambiguous_strategy(const TwoStateEnsemble& ens);

enum class InputDistribution {
  kHaar,       // uniform on the Bloch sphere
  kBasisZero,  // always |0>
};

/// Monte Carlo average of the measure-and-prepare fidelity (computational
/// basis measurement, Bob prepares the observed basis state) over random pure
/// inputs. Converges to 2/3 for Haar inputs.
MeanEstimate unknown_state_classical_fidelity(std::size_t samples, RngSeed seed,
                                              InputDistribution dist = InputDistribution::kHaar,
                                              Execution ex = Execution::kParallel);

}  // namespace twostate
