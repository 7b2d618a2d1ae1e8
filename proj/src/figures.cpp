#include "twostate/figures.hpp"

#include <stdexcept>

#include "twostate/channel_strats.hpp"
#include "twostate/classical.hpp"
#include "twostate/telecloning.hpp"

namespace twostate {

std::vector<double> inclusive_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 points");
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  g.back() = hi;
  return g;
}

std::vector<ClassicalRow> classical_sweep(std::size_t theta_steps, Execution ex) {
  const auto thetas = inclusive_grid(0.0, kHalfPi, theta_steps);
  return grid_map(
      thetas.size(),
      [&](std::size_t i) {
        const TwoStateEnsemble ens(thetas[i]);
        return ClassicalRow{thetas[i], fidelity_min_error(ens), fidelity_unambiguous(ens),
                            fidelity_optimized(ens).fidelity, fidelity_fuchs_peres(ens)};
      },
      ex);
}

std::vector<ChannelRow> channel_sweep(double theta, std::size_t alpha_steps, Execution ex) {
  const TwoStateEnsemble ens(theta);
  const auto alpha_sq = inclusive_grid(0.0, 0.5, alpha_steps);
  return grid_map(
      alpha_sq.size(),
      [&](std::size_t i) {
        const Channel ch = Channel::from_alpha_sq(alpha_sq[i]);
        const auto best = optimize_combined(ens, ch);
        return ChannelRow{alpha_sq[i], two_state_direct_fidelity(ens, ch),
                          purification_fidelity_two_state(ens, ch), best.fidelity,
                          best.alpha_prime.value_or(ch.alpha())};
      },
      ex);
}

std::vector<UnknownChannelRow> unknown_channel_sweep(std::size_t alpha_steps, Execution ex) {
  const auto alpha_sq = inclusive_grid(0.0, 0.5, alpha_steps);
  return grid_map(
      alpha_sq.size(),
      [&](std::size_t i) {
        const Channel ch = Channel::from_alpha_sq(alpha_sq[i]);
        return UnknownChannelRow{alpha_sq[i], average_fidelity_direct(ch),
                                 purification_fidelity_unknown(ch)};
      },
      ex);
}

std::vector<TelecloningRow> telecloning_sweep(std::size_t theta_steps, Execution ex) {
  const auto thetas = inclusive_grid(0.0, kHalfPi, theta_steps);
  return grid_map(
      thetas.size(),
      [&](std::size_t i) {
        const TwoStateEnsemble ens(thetas[i]);
        const CloneCoeffs k = optimize_coeffs(ens);
        return TelecloningRow{thetas[i],
                              k.a(),
                              k.b(),
                              k.c(),
                              global_clone_fidelity(ens, k),
                              optimal_global_fidelity(ens),
                              alice_receivers_entanglement(build_telecloning_state(k))};
      },
      ex);
}

CsvTable to_table(const std::vector<ClassicalRow>& rows) {
  CsvTable t;
  t.columns = {"theta", "f_min_error", "f_unambiguous", "f_optimized", "f_fuchs_peres"};
  for (const auto& r : rows) {
    t.rows.push_back({r.theta, r.f_min_error, r.f_unambiguous, r.f_optimized, r.f_fuchs_peres});
  }
  return t;
}

CsvTable to_table(const std::vector<ChannelRow>& rows) {
  CsvTable t;
  t.columns = {"alpha_sq", "f_direct", "f_purification", "f_combined", "alpha_prime_opt"};
  for (const auto& r : rows) {
    t.rows.push_back({r.alpha_sq, r.f_direct, r.f_purification, r.f_combined, r.alpha_prime_opt});
  }
  return t;
}

CsvTable to_table(const std::vector<UnknownChannelRow>& rows) {
  CsvTable t;
  t.columns = {"alpha_sq", "f_direct_avg", "f_purif_unknown"};
  for (const auto& r : rows) t.rows.push_back({r.alpha_sq, r.f_direct_avg, r.f_purif_unknown});
  return t;
}

CsvTable to_table(const std::vector<TelecloningRow>& rows) {
  CsvTable t;
  t.columns = {"theta", "a", "b", "c", "f_global_teleclone", "f_global_optimal",
               "entanglement_alice_receivers"};
  for (const auto& r : rows) {
    t.rows.push_back({r.theta, r.a, r.b, r.c, r.f_global_teleclone, r.f_global_optimal,
                      r.entanglement_alice_receivers});
  }
  return t;
}

}  // namespace twostate
