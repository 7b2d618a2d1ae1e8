#pragma once

// Ground-truth execution of measure-and-correct protocols. Nothing here uses
// the closed-form fidelities; results come from explicit state vectors, Bell
// projections, corrections and partial traces.

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "twostate/classical.hpp"
#include "twostate/ensemble.hpp"
#include "twostate/parallel.hpp"
#include "twostate/qcore.hpp"
#include "twostate/rng.hpp"

namespace twostate {

/// A one-qubit input is prepended to `resource_state` as qubit 0, the pair
/// `measured_pair` (indices into the combined register) is Bell-measured, the
/// correction for the outcome acts on the remaining qubits, and the result is
/// compared on `evaluation_targets` (indices into the remaining qubits) with
/// one copy of the input per target.
struct ProtocolSpec {
  PureState resource_state;
  std::array<int, 2> measured_pair{0, 1};
  std::map<BellIndex, LocalOperator> corrections;
  std::vector<int> evaluation_targets{0};
};

/// Pauli correction keyed to the Bell outcome: phi+ -> I, phi- -> Z,
/// psi+ -> X, psi- -> X then Z (the matrix ZX).
Matrix2 standard_correction(BellIndex index);

/// One-qubit teleportation through `resource` (2 qubits) with the standard
/// corrections on the receiving qubit.
ProtocolSpec standard_teleportation(const PureState& resource);

struct ProtocolOutcome {
  BellIndex index;
  double probability;
  PureState corrected_state;  // on the unmeasured qubits
  double fidelity;            // against input^{x targets}, 0 when probability ~ 0
};

/// Runs every Bell outcome exactly.
std::array<ProtocolOutcome, 4> enumerate_protocol(const PureState& input, const ProtocolSpec& spec);

/// sum_i p_i F_i
double enumerate_protocol_fidelity(const PureState& input, const ProtocolSpec& spec);

/// Samples Bell outcomes from their distribution. Requires samples >= 100.
MeanEstimate mc_protocol_fidelity(const PureState& input, const ProtocolSpec& spec,
                                  std::size_t samples, RngSeed seed,
                                  Execution ex = Execution::kParallel);

/// Haar-random inputs, each evaluated by exact enumeration.
MeanEstimate mc_haar_protocol_fidelity(const ProtocolSpec& spec, std::size_t samples, RngSeed seed,
                                       Execution ex = Execution::kParallel);

/// Exact Bloch-sphere average: the six Pauli eigenstates form a 3-design and
/// the protocol fidelity is a degree-(2,2) polynomial in the input amplitudes.
double design_average_protocol_fidelity(const ProtocolSpec& spec);

/// Ensemble-averaged fidelity of a one-qubit protocol.
double enumerate_ensemble_fidelity(const TwoStateEnsemble& ens, const ProtocolSpec& spec);

/// Density-matrix evaluation: sums tr(A_i rho_j) <psi_j|guess_i><guess_i|psi_j>
/// over outcomes and signal states using density matrices.
double enumerate_classical_strategy(const ClassicalStrategy& strategy, const TwoStateEnsemble& ens);

struct FilterResult {
  double success_probability;
  PureState filtered;  // meaningful when success_probability > 0
};

/// Local filter on Alice's half of alpha|00> + beta|11> that succeeds with the
/// channel alpha'|00> + beta'|11>.
FilterResult procrustean_filter(const Channel& channel, double alpha_prime);

/// Purify fully (to a maximal channel) then teleport; on failure run the
/// optimized classical strategy. Exact expectation over both branches.
double simulate_purification_branch(const TwoStateEnsemble& ens, const Channel& channel);

/// Same with partial purification to alpha'.
double simulate_partial_purification(const TwoStateEnsemble& ens, const Channel& channel,
                                     double alpha_prime);

}  // namespace twostate
