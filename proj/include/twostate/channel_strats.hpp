#pragma once

// Teleportation of the two-state ensemble through a single non-maximally
// entangled pure channel alpha|00> + beta|11>.

#include "twostate/classical.hpp"
#include "twostate/ensemble.hpp"

namespace twostate {

enum class ChannelMethod { kDirect, kPurification, kCombined };

struct ChannelStrategyReport {
  double fidelity = 0.0;
  ChannelMethod method = ChannelMethod::kCombined;
  // Alpha of the channel the filter purifies to; set for kCombined only.
  std::optional<double> alpha_prime;
};

/// Standard teleportation (Pauli corrections) of cos(t/2)|0> + e^{i phi}
/// sin(t/2)|1>: cos^4(t/2) + sin^4(t/2) + alpha beta sin^2 t, independent of phi.
double direct_fidelity_state(double theta, const Channel& channel);

/// Haar average of direct_fidelity_state: (2/3)(1 + alpha beta).
double average_fidelity_direct(const Channel& channel);

/// Maximal overlap with a maximally entangled state: (1 + 2 alpha beta) / 2.
double singlet_fraction(const Channel& channel);

/// Optimal average teleportation fidelity from the singlet fraction, (2f + 1)/3.
double horodecki_optimal_fidelity(const Channel& channel);

/// Direct teleportation averaged over the ensemble. Both signal states give the
/// same value, so this shares direct_fidelity_state.
double two_state_direct_fidelity(const TwoStateEnsemble& ens, const Channel& channel);

/// Procrustean filtering (success 2 alpha^2) then perfect teleportation, falling
/// back to measure-and-prepare (2/3) for unknown inputs: (2/3)(1 + alpha^2).
double purification_fidelity_unknown(const Channel& channel);

/// Same with the optimized two-state classical fallback.
double purification_fidelity_two_state(const TwoStateEnsemble& ens, const Channel& channel);

/// Success probability (alpha/alpha')^2 of filtering the channel up to alpha'.
/// Defined as 1 when alpha' == alpha (no filtering), including alpha = 0.
double partial_purification_success(const Channel& channel, double alpha_prime);

/// Filter to alpha' in [alpha, 1/sqrt(2)]; on success teleport directly, on
/// failure use the optimized classical strategy.
double combined_fidelity(const TwoStateEnsemble& ens, const Channel& channel, double alpha_prime);

/// Maximizes combined_fidelity over alpha' (golden-section search, 1e-8 in
/// alpha'), never returning less than either endpoint.
ChannelStrategyReport optimize_combined(const TwoStateEnsemble& ens, const Channel& channel);

}  // namespace twostate
