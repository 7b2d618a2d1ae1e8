#pragma once

// Telecloning: teleportation through a four-qubit resource (port, ancilla,
// cloneB, cloneC) so that two remote receivers each end up with a clone of
// the input.

#include <array>
#include <utility>

#include "twostate/ensemble.hpp"
#include "twostate/protocol_sim.hpp"
#include "twostate/qcore.hpp"

namespace twostate {

/// Amplitudes of the symmetric cloner
///   |0>|00> -> a|0>|00> + b|1>(|01> + |10>) + c|0>|11>
/// (ancilla first); |1> maps to the 0<->1 mirror. a^2 + 2b^2 + c^2 = 1.
class CloneCoeffs {
 public:
  CloneCoeffs(double a, double b, double c);

  /// a = cos u, b = sin u cos v / sqrt(2), c = sin u sin v for u, v in [0, pi/2].
  static CloneCoeffs from_angles(double u, double v);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  double a_, b_, c_;
};

/// Optimal universal 1 -> 2 cloner: (sqrt(2/3), sqrt(1/6), 0).
CloneCoeffs universal_coeffs();

/// (phi0, phi1) on (ancilla, B, C); phi1 = (X x X x X) phi0.
std::pair<PureState, PureState> build_clone_states(const CloneCoeffs& coeffs);

struct TelecloningSystem {
  PureState state;  // (|0>|phi0> + |1>|phi1>)/sqrt(2) on (port, ancilla, B, C)
  CloneCoeffs coeffs;
};

TelecloningSystem build_telecloning_state(const CloneCoeffs& coeffs);

/// Bell measurement of (input, port) and P x P x P on (ancilla, B, C) with P
/// the standard teleportation correction for the outcome. `targets` index the
/// three receiving qubits (0 = ancilla, 1 = B, 2 = C).
ProtocolSpec telecloning_protocol(const TelecloningSystem& system, std::vector<int> targets = {1});

struct TelecloneBranch {
  BellIndex index;
  double probability;
  PureState corrected;  // on (ancilla, B, C)
};

struct TelecloneResult {
  std::array<TelecloneBranch, 4> per_outcome;
  DensityMatrix clone_b;
  DensityMatrix clone_c;
  DensityMatrix joint_clones;  // (B, C)
};

TelecloneResult teleclone(const PureState& input, const TelecloningSystem& system);

/// x phi0 + y phi1 for input x|0> + y|1>: the cloner applied locally, no
/// teleportation involved.
PureState apply_cloner(const PureState& input, const CloneCoeffs& coeffs);

/// (1/2) sum_j <psi_j psi_j| rho_BC^(j) |psi_j psi_j>, with rho_BC from the
/// telecloning protocol.
double global_clone_fidelity(const TwoStateEnsemble& ens, const CloneCoeffs& coeffs);

/// The same figure of merit computed from apply_cloner.
double local_clone_global_fidelity(const TwoStateEnsemble& ens, const CloneCoeffs& coeffs);

/// Coefficients maximizing global_clone_fidelity on a^2 + 2b^2 + c^2 = 1,
/// a, b, c >= 0 (fixed start grid plus Nelder-Mead refinement).
CloneCoeffs optimize_coeffs(const TwoStateEnsemble& ens);

/// Best global fidelity of any 1 -> 2 cloner for the ensemble, i.e. the max of
/// (1/2)(|<psi1 psi1|chi1>|^2 + |<psi2 psi2|chi2>|^2) subject to
/// <chi1|chi2> = <psi1|psi2>. The outputs are searched among real vectors of
/// the symmetric two-qubit subspace with chi2 the 0<->1 mirror of chi1.
double optimal_global_fidelity(const TwoStateEnsemble& ens);

/// Entropy (ebits) of the receivers' joint state (B, C); equals the
/// entanglement across (port, ancilla) | (B, C).
double alice_receivers_entanglement(const TelecloningSystem& system);

/// The closed-form 4x4 receiver matrix as commonly quoted for this family,
///   (1/2) [[a^2+b^2+c^2, 0, 0, 2a(b+c)], [0, b^2, 0, 0], [0, 0, b^2, 0],
///          [2a(b+c), 0, 0, a^2+b^2+c^2]].
/// It is kept for comparison only: it does not equal the traced state (at the
/// universal coefficients its entropy is ~1.2075, the traced state's is
/// log2 3). Throws std::invalid_argument where the matrix is not positive.
DensityMatrix quoted_receiver_matrix(const CloneCoeffs& coeffs);

}  // namespace twostate
