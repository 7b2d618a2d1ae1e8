#include "twostate/protocol_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twostate {

Matrix2 standard_correction(BellIndex index) {
  switch (index) {
    case BellIndex::kPhiPlus: return gates::identity();
    case BellIndex::kPhiMinus: return gates::pauli_z();
    case BellIndex::kPsiPlus: return gates::pauli_x();
    case BellIndex::kPsiMinus: return gates::pauli_z() * gates::pauli_x();
  }
  throw std::invalid_argument("bad Bell index");
}

ProtocolSpec standard_teleportation(const PureState& resource) {
  if (resource.n_qubits() != 2) throw std::invalid_argument("teleportation resource must be 2 qubits");
  ProtocolSpec spec{resource, {0, 1}, {}, {0}};
  for (BellIndex k : kBellIndices) {
    spec.corrections.emplace(k, LocalOperator(std::vector<Matrix2>{standard_correction(k)}));
  }
  return spec;
}

std::array<ProtocolOutcome, 4> enumerate_protocol(const PureState& input, const ProtocolSpec& spec) {
  if (input.n_qubits() != 1) throw std::invalid_argument("protocol input must be one qubit");
  const PureState full = tensor(input, spec.resource_state);
  const auto outcomes = bell_measure(full, spec.measured_pair);
  const int n_post = full.n_qubits() - 2;

  PureState target = input;
  for (std::size_t k = 1; k < spec.evaluation_targets.size(); ++k) target = tensor(target, input);

  std::array<ProtocolOutcome, 4> out{
      ProtocolOutcome{BellIndex::kPhiPlus, 0.0, outcomes[0].post_state, 0.0},
      ProtocolOutcome{BellIndex::kPhiMinus, 0.0, outcomes[1].post_state, 0.0},
      ProtocolOutcome{BellIndex::kPsiPlus, 0.0, outcomes[2].post_state, 0.0},
      ProtocolOutcome{BellIndex::kPsiMinus, 0.0, outcomes[3].post_state, 0.0}};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto it = spec.corrections.find(outcomes[k].index);
    if (it == spec.corrections.end()) {
      throw std::invalid_argument("protocol has no correction for Bell outcome " +
                                  std::to_string(static_cast<int>(outcomes[k].index)));
    }
    if (it->second.n_qubits() != n_post) {
      throw std::invalid_argument("correction size does not match the receiving register");
    }
    out[k].probability = outcomes[k].probability;
    out[k].corrected_state = apply_local(it->second, outcomes[k].post_state);
    if (out[k].probability > kNormTolerance) {
      out[k].fidelity =
          fidelity(target, reduced_density(out[k].corrected_state, spec.evaluation_targets));
    }
  }
  return out;
}

double enumerate_protocol_fidelity(const PureState& input, const ProtocolSpec& spec) {
  double f = 0.0;
  for (const auto& o : enumerate_protocol(input, spec)) f += o.probability * o.fidelity;
  return f;
}

MeanEstimate mc_protocol_fidelity(const PureState& input, const ProtocolSpec& spec,
                                  std::size_t samples, RngSeed seed, Execution ex) {
  if (samples < 100) throw std::invalid_argument("mc_protocol_fidelity needs >= 100 samples");
  const auto outcomes = enumerate_protocol(input, spec);
  std::array<double, 4> cumulative{};
  double acc = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    acc += outcomes[k].probability;
    cumulative[k] = acc;
  }
  auto sample = [&](Rng& rng) {
    const double u = rng.uniform() * acc;
    std::size_t k = 0;
    while (k < 3 && u >= cumulative[k]) ++k;
    return outcomes[k].fidelity;
  };
  return mc_mean(samples, seed, sample, ex);
}

MeanEstimate mc_haar_protocol_fidelity(const ProtocolSpec& spec, std::size_t samples, RngSeed seed,
                                       Execution ex) {
  if (samples < 100) throw std::invalid_argument("mc_haar_protocol_fidelity needs >= 100 samples");
  auto sample = [&](Rng& rng) {
    const double z = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * kPi * rng.uniform();
    return enumerate_protocol_fidelity(PureState::bloch(std::acos(z), phi), spec);
  };
  return mc_mean(samples, seed, sample, ex);
}

double design_average_protocol_fidelity(const ProtocolSpec& spec) {
  const double octahedron[6][2] = {{0, 0},          {kPi, 0},         {kHalfPi, 0},
                                   {kHalfPi, kPi}, {kHalfPi, kHalfPi}, {kHalfPi, -kHalfPi}};
  double f = 0.0;
  for (const auto& p : octahedron) f += enumerate_protocol_fidelity(PureState::bloch(p[0], p[1]), spec);
  return f / 6.0;
}

double enumerate_ensemble_fidelity(const TwoStateEnsemble& ens, const ProtocolSpec& spec) {
  const auto [psi1, psi2] = make_states(ens);
  return 0.5 * (enumerate_protocol_fidelity(psi1, spec) + enumerate_protocol_fidelity(psi2, spec));
}

double enumerate_classical_strategy(const ClassicalStrategy& strategy, const TwoStateEnsemble& ens) {
  const auto [psi1, psi2] = make_states(ens);
  double f = 0.0;
  for (const PureState* psi : {&psi1, &psi2}) {
    const DensityMatrix rho = DensityMatrix::projector(*psi);
    for (std::size_t i = 0; i < strategy.size(); ++i) {
      const double p = (strategy.povm()[i] * rho.elements()).trace().real();
      f += p * fidelity(*psi, DensityMatrix::projector(strategy.guesses()[i]));
    }
  }
  return 0.5 * f;
}

FilterResult procrustean_filter(const Channel& channel, double alpha_prime) {
  const double max_alpha = 1.0 / std::sqrt(2.0);
  if (!(alpha_prime >= channel.alpha() - 1e-12 && alpha_prime <= max_alpha + 1e-12)) {
    throw std::invalid_argument("alpha' must lie in [alpha, 1/sqrt(2)]");
  }
  const PureState resource = channel.state();
  if (alpha_prime <= channel.alpha()) return {1.0, resource};
  const Channel target(alpha_prime);
  // Damps Alice's |1> so the |11> amplitude ratio becomes beta'/alpha'.
  const double damping = channel.alpha() * target.beta() / (channel.beta() * target.alpha());
  Matrix2 kraus = Matrix2::Zero();
  kraus(0, 0) = 1.0;
  kraus(1, 1) = damping;
  const Vector branch = apply_single_qubit(kraus, 0, 2, resource.amplitudes());
  const double p = branch.squaredNorm();
  if (p <= kNormTolerance) return {0.0, resource};
  return {p, PureState::normalized(2, branch)};
}

double simulate_partial_purification(const TwoStateEnsemble& ens, const Channel& channel,
                                     double alpha_prime) {
  const FilterResult filter = procrustean_filter(channel, alpha_prime);
  double f = 0.0;
  if (filter.success_probability > 0.0) {
    f += filter.success_probability *
         enumerate_ensemble_fidelity(ens, standard_teleportation(filter.filtered));
  }
  if (filter.success_probability < 1.0) {
    f += (1.0 - filter.success_probability) *
         enumerate_classical_strategy(optimized_strategy(ens), ens);
  }
  return f;
}

double simulate_purification_branch(const TwoStateEnsemble& ens, const Channel& channel) {
  return simulate_partial_purification(ens, channel, 1.0 / std::sqrt(2.0));
}

}  // namespace twostate
