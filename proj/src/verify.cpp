#include "twostate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twostate/channel_strats.hpp"
#include "twostate/classical.hpp"
#include "twostate/csv.hpp"
#include "twostate/ensemble.hpp"
#include "twostate/figures.hpp"
#include "twostate/protocol_sim.hpp"
#include "twostate/random_states.hpp"
#include "twostate/telecloning.hpp"

namespace twostate {

namespace {

class Suite {
 public:
  void add(std::string module, std::string name, double deviation, double tolerance,
           std::string detail = {}) {
    const bool ok = std::isfinite(deviation) && deviation <= tolerance;
    results_.push_back({std::move(module), std::move(name), ok, deviation, tolerance, std::move(detail)});
  }
  void add_flag(std::string module, std::string name, bool ok, std::string detail = {}) {
    add(std::move(module), std::move(name), ok ? 0.0 : 1.0, 0.0, std::move(detail));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string fmt(double x) { return format_number(x); }

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix2& a, const Matrix2& b) {
  Matrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  return out;
}

void check_qcore(Suite& s, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 1001));
  double norm_dev = 0.0, trace_dev = 0.0, entropy_bound = 0.0, entropy_inv = 0.0;
  double bell_sum = 0.0, bell_recon = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_state(4, rng);
    const LocalOperator u = random_local_operator(4, rng);
    norm_dev = std::max(norm_dev, std::abs(apply_local(u, psi).amplitudes().norm() - 1.0));

    const DensityMatrix rho = DensityMatrix::projector(psi);
    const DensityMatrix one_step = partial_trace(rho, {0, 2});
    const DensityMatrix two_step = partial_trace(partial_trace(rho, {0, 1, 2}), {0, 2});
    trace_dev = std::max(trace_dev, max_abs_diff(one_step.elements(), two_step.elements()));

    // Mixed 2-qubit state: entropy in [0, 2] and invariant under local unitaries.
    const DensityMatrix mixed = reduced_density(psi, {1, 3});
    const double e = von_neumann_entropy(mixed);
    entropy_bound = std::max({entropy_bound, -e, e - 2.0});
    const LocalOperator v = random_local_operator(2, rng);
    const Matrix uu = kron(v.at(0), v.at(1));
    entropy_inv = std::max(entropy_inv,
                           std::abs(von_neumann_entropy(DensityMatrix(2, uu * mixed.elements() * uu.adjoint())) - e));

    const auto outcomes = bell_measure(psi, {1, 3});
    double total = 0.0;
    Matrix recon = Matrix::Zero(4, 4);
    for (const auto& o : outcomes) {
      total += o.probability;
      recon += o.probability * DensityMatrix::projector(o.post_state).elements();
    }
    bell_sum = std::max(bell_sum, std::abs(total - 1.0));
    bell_recon = std::max(bell_recon, max_abs_diff(recon, reduced_density(psi, {0, 2}).elements()));
  }
  s.add("qcore", "local unitaries preserve the norm", norm_dev, 1e-12);
  s.add("qcore", "two-step partial trace equals one-step", trace_dev, 1e-12);
  s.add("qcore", "0 <= S(rho) <= n", entropy_bound, 1e-12);
  s.add("qcore", "entropy invariant under local unitaries", entropy_inv, 1e-10);
  s.add("qcore", "Bell outcome probabilities sum to 1", bell_sum, 1e-12);
  s.add("qcore", "Bell outcomes reconstruct the complement's reduced state", bell_recon, 1e-12);
}

void check_ensemble(Suite& s, const VerifyOptions& opt) {
  const auto thetas = inclusive_grid(0.0, kHalfPi, opt.theta_steps);
  double worst_step = -1.0;
  for (std::size_t i = 1; i < thetas.size(); ++i) {
    const double d = source_entropy(TwoStateEnsemble(thetas[i])) -
                     source_entropy(TwoStateEnsemble(thetas[i - 1]));
    worst_step = std::max(worst_step, d);
  }
  s.add_flag("ensemble", "source entropy strictly decreasing", worst_step < 0.0,
             "largest step " + fmt(worst_step));

  double commute = 0.0, overlap_dev = 0.0;
  const Matrix2 x = gates::pauli_x();
  for (double t : inclusive_grid(0.0, kHalfPi, 100)) {
    const TwoStateEnsemble ens(t);
    const Matrix rho = ensemble_density(ens).elements();
    commute = std::max(commute, max_abs_diff(x * rho, rho * x));
    const auto [p1, p2] = make_states(ens);
    overlap_dev = std::max(overlap_dev, std::abs(std::abs(inner(p1, p2)) - overlap(ens)));
  }
  s.add("ensemble", "ensemble density commutes with X", commute, 1e-15);
  s.add("ensemble", "overlap equals the computed inner product", overlap_dev, 1e-12);
}

void check_classical(Suite& s, const VerifyOptions& opt) {
  const auto thetas = inclusive_grid(0.0, kHalfPi, opt.theta_steps);
  auto f_opt = [&](double t) { return fidelity_optimized(TwoStateEnsemble(t)).fidelity + opt.tamper; };

  double order = 0.0, sym = 0.0;
  for (double t : thetas) {
    const TwoStateEnsemble ens(t);
    order = std::max({order, fidelity_unambiguous(ens) - fidelity_min_error(ens),
                      fidelity_min_error(ens) - f_opt(t)});
    sym = std::max(sym, std::abs(f_opt(t) - f_opt(std::max(0.0, kHalfPi - t))));
  }
  s.add("classical", "f_unambiguous <= f_min_error <= f_optimized", order, 1e-15);
  s.add("classical", "f_optimized symmetric about pi/4", sym, 1e-9);

  double coincide = 0.0;
  for (double t : inclusive_grid(0.0, kHalfPi, 200)) {
    coincide = std::max(coincide, std::abs(f_opt(t) - fidelity_fuchs_peres(TwoStateEnsemble(t))));
  }
  s.add("classical", "f_optimized equals the Fuchs-Peres form", coincide, 1e-9);

  double evaluator = 0.0, stationarity = 0.0;
  for (double t : inclusive_grid(0.0, 1.5, 61)) {
    const TwoStateEnsemble ens(t);
    for (double g : {0.0, 0.3, 0.9, 1.4}) {
      evaluator = std::max(evaluator, std::abs(classical_fidelity(guess_strategy(g), ens) -
                                               guess_fidelity(ens, g)));
    }
    const double g = optimal_guess_angle(ens);
    const double h = 1e-5;
    const double fd = (guess_fidelity(ens, g + h) - guess_fidelity(ens, g - h)) / (2 * h);
    stationarity = std::max({stationarity, std::abs(fd), std::abs(guess_fidelity_derivative(ens, g))});
  }
  s.add("classical", "four-term POVM average equals the symmetric two-term form", evaluator, 1e-12);
  s.add("classical", "dF/dg vanishes at the optimal guess angle", stationarity, 1e-8);

  const MeanEstimate mc = unknown_state_classical_fidelity(opt.samples, opt.seed,
                                                           InputDistribution::kHaar, opt.execution);
  const double dev = std::abs(mc.mean - 2.0 / 3.0);
  s.add("classical", "unknown-state measure-and-prepare averages to 2/3", dev, 4.0 * mc.std_error,
        "mean " + fmt(mc.mean) + " stderr " + fmt(mc.std_error));
}

void check_channel(Suite& s, const VerifyOptions& opt) {
  double horo = 0.0, mono = 0.0, unknown_dom = 0.0;
  double prev_avg = -1.0, prev_pur = -1.0;
  for (double a2 : inclusive_grid(0.0, 0.5, opt.alpha_steps)) {
    const Channel ch = Channel::from_alpha_sq(a2);
    horo = std::max(horo, std::abs(horodecki_optimal_fidelity(ch) - average_fidelity_direct(ch)));
    mono = std::max({mono, prev_avg - average_fidelity_direct(ch), prev_pur - purification_fidelity_unknown(ch)});
    prev_avg = average_fidelity_direct(ch);
    prev_pur = purification_fidelity_unknown(ch);
    unknown_dom = std::max(unknown_dom, purification_fidelity_unknown(ch) - average_fidelity_direct(ch));
  }
  s.add("channel_strats", "(2f+1)/3 equals (2/3)(1+alpha beta)", horo, 1e-15);
  s.add("channel_strats", "unknown-state fidelities nondecreasing in alpha", mono, 0.0);
  s.add("channel_strats", "direct beats purification for unknown states", unknown_dom, 0.0);

  double dominance = 0.0, endpoints = 0.0;
  const auto thetas = inclusive_grid(0.0, kHalfPi, 50);
  const auto alphas = inclusive_grid(0.0, 1.0 / std::sqrt(2.0), 50);
  for (double t : thetas) {
    const TwoStateEnsemble ens(t);
    for (double a : alphas) {
      const Channel ch(a);
      const double direct = two_state_direct_fidelity(ens, ch);
      const double purif = purification_fidelity_two_state(ens, ch);
      dominance = std::max(dominance, std::max(direct, purif) - optimize_combined(ens, ch).fidelity);
      endpoints = std::max({endpoints, std::abs(combined_fidelity(ens, ch, ch.alpha()) - direct),
                            std::abs(combined_fidelity(ens, ch, 1.0 / std::sqrt(2.0)) - purif)});
    }
  }
  s.add("channel_strats", "optimized combination dominates direct and purification", dominance, 1e-12);
  s.add("channel_strats", "combined fidelity reduces to its endpoints", endpoints, 1e-15);

  const TwoStateEnsemble quarter(kPi / 4);
  const double classical = fidelity_optimized(quarter).fidelity + opt.tamper;
  double first_alpha = -1.0;
  for (double a : inclusive_grid(0.0, 1.0 / std::sqrt(2.0), 1001)) {
    if (a > 0.0 && classical > two_state_direct_fidelity(quarter, Channel(a))) {
      first_alpha = a;
      break;
    }
  }
  s.add_flag("channel_strats", "direct teleportation falls below classical at low entanglement",
             first_alpha > 0.0, "e.g. alpha = " + fmt(first_alpha));

  double continuity = 0.0;
  const Channel ch = Channel::from_alpha_sq(0.2);
  const auto grid = inclusive_grid(ch.alpha(), 1.0 / std::sqrt(2.0), 2001);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    continuity = std::max(continuity, std::abs(combined_fidelity(quarter, ch, grid[i]) -
                                               combined_fidelity(quarter, ch, grid[i - 1])));
  }
  s.add("channel_strats", "combined fidelity continuous in alpha'", continuity, 1e-3);
}

void check_protocol(Suite& s, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 2002));
  double oracle = 0.0, prob = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = kHalfPi * rng.uniform();
    const Channel ch(rng.uniform() / std::sqrt(2.0));
    const TwoStateEnsemble ens(t);
    const ProtocolSpec spec = standard_teleportation(ch.state());
    oracle = std::max(oracle, std::abs(enumerate_ensemble_fidelity(ens, spec) - two_state_direct_fidelity(ens, ch)));
    for (const PureState& in : {make_states(ens).first, random_state(1, rng)}) {
      double total = 0.0;
      for (const auto& o : enumerate_protocol(in, spec)) {
        prob = std::max(prob, -o.probability);
        total += o.probability;
      }
      prob = std::max(prob, std::abs(total - 1.0));
    }
  }
  s.add("protocol_sim", "enumerated teleportation equals the closed form", oracle, 1e-12);
  s.add("protocol_sim", "outcome probabilities nonnegative and normalized", prob, 1e-12);

  const Channel ch = Channel::from_alpha_sq(0.3);
  const ProtocolSpec spec = standard_teleportation(ch.state());
  const MeanEstimate haar = mc_haar_protocol_fidelity(spec, opt.samples, opt.seed, opt.execution);
  s.add("protocol_sim", "Haar Monte Carlo reproduces (2/3)(1+alpha beta)",
        std::abs(haar.mean - average_fidelity_direct(ch)), 4.0 * haar.std_error,
        "mean " + fmt(haar.mean) + " stderr " + fmt(haar.std_error));
  s.add("protocol_sim", "3-design average reproduces (2/3)(1+alpha beta)",
        std::abs(design_average_protocol_fidelity(spec) - average_fidelity_direct(ch)), 1e-12);

  const PureState in = make_states(TwoStateEnsemble(kPi / 4)).first;
  const std::size_t n = std::max<std::size_t>(100, opt.samples / 10);
  const MeanEstimate a = mc_protocol_fidelity(in, spec, n, opt.seed, Execution::kSerial);
  const MeanEstimate b = mc_protocol_fidelity(in, spec, n, opt.seed, Execution::kParallel);
  const MeanEstimate c = mc_protocol_fidelity(in, spec, n, opt.seed, opt.execution);
  s.add_flag("protocol_sim", "Monte Carlo reproducible for a fixed seed",
             a.mean == b.mean && a.std_error == b.std_error && b.mean == c.mean);
  s.add("protocol_sim", "sampled outcomes agree with enumeration",
        std::abs(a.mean - enumerate_protocol_fidelity(in, spec)), 4.0 * a.std_error);

  double classical = 0.0;
  for (double t : inclusive_grid(0.0, kHalfPi, 37)) {
    const TwoStateEnsemble ens(t);
    classical = std::max({classical,
                          std::abs(enumerate_classical_strategy(min_error_strategy(ens), ens) - fidelity_min_error(ens)),
                          std::abs(enumerate_classical_strategy(unambiguous_strategy(ens), ens) - fidelity_unambiguous(ens)),
                          std::abs(enumerate_classical_strategy(optimized_strategy(ens), ens) -
                                   (fidelity_optimized(ens).fidelity + opt.tamper))});
  }
  s.add("protocol_sim", "classical strategies enumerate to their closed forms", classical, 1e-12);

  double purif = 0.0;
  for (double t : inclusive_grid(0.0, kHalfPi, 11)) {
    const TwoStateEnsemble ens(t);
    for (double a2 : inclusive_grid(0.0, 0.5, 11)) {
      const Channel c2 = Channel::from_alpha_sq(a2);
      purif = std::max(purif, std::abs(simulate_purification_branch(ens, c2) -
                                       purification_fidelity_two_state(ens, c2)));
      const double ap = 0.5 * (c2.alpha() + 1.0 / std::sqrt(2.0));
      purif = std::max(purif, std::abs(simulate_partial_purification(ens, c2, ap) -
                                       combined_fidelity(ens, c2, ap)));
    }
  }
  s.add("protocol_sim", "filter-and-teleport simulation matches the purification formulas", purif, 1e-12);
}

void check_telecloning(Suite& s, const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 3003));
  const CloneCoeffs universal = universal_coeffs();
  const TelecloningSystem usys = build_telecloning_state(universal);

  std::vector<CloneCoeffs> families = {universal, CloneCoeffs(1, 0, 0),
                                       CloneCoeffs::from_angles(0.7, 0.6155)};
  double exact = 0.0, symmetric = 0.0, mixed = 0.0, faithful = 0.0;
  for (const auto& k : families) {
    const TelecloningSystem sys = build_telecloning_state(k);
    const auto [phi0, phi1] = build_clone_states(k);
    for (int q = 0; q < 4; ++q) {
      mixed = std::max(mixed, max_abs_diff(reduced_density(sys.state, {q}).elements(),
                                           DensityMatrix::maximally_mixed(1).elements()));
    }
    for (int i = 0; i < 20; ++i) {
      const PureState in = random_state(1, rng);
      const Vector expect = in[0] * phi0.amplitudes() + in[1] * phi1.amplitudes();
      const TelecloneResult r = teleclone(in, sys);
      for (const auto& br : r.per_outcome) {
        exact = std::max(exact, (br.corrected.amplitudes() - expect).cwiseAbs().maxCoeff());
      }
      symmetric = std::max(symmetric, max_abs_diff(r.clone_b.elements(), r.clone_c.elements()));
    }
    for (double t : inclusive_grid(0.0, kHalfPi, 11)) {
      const TwoStateEnsemble ens(t);
      faithful = std::max(faithful, std::abs(global_clone_fidelity(ens, k) - local_clone_global_fidelity(ens, k)));
    }
  }
  s.add("telecloning", "Pauli-corrected branches equal x phi0 + y phi1", exact, 1e-12);
  s.add("telecloning", "clone B equals clone C", symmetric, 1e-12);
  s.add("telecloning", "every single-qubit reduced state is I/2", mixed, 1e-10);
  s.add("telecloning", "telecloned fidelity equals the local cloner's", faithful, 1e-12);

  s.add("telecloning", "universal receivers' entanglement is log2 3",
        std::abs(alice_receivers_entanglement(usys) - std::log2(3.0)), 1e-9);
  double clone_fid = 0.0;
  for (std::size_t b = 0; b < 2; ++b) {
    const PureState in = PureState::basis(1, b);
    clone_fid = std::max(clone_fid, std::abs(enumerate_protocol_fidelity(in, telecloning_protocol(usys, {1})) - 5.0 / 6.0));
  }
  s.add("telecloning", "universal clone fidelity for basis inputs is 5/6", clone_fid, 1e-9);

  const auto rows = telecloning_sweep(50, opt.execution);
  double ceiling = -1.0, sandwich = -1.0, gap = 0.0;
  for (const auto& r : rows) {
    ceiling = std::max(ceiling, r.entanglement_alice_receivers - std::log2(3.0));
    sandwich = std::max(sandwich, r.f_global_teleclone - r.f_global_optimal);
    gap = std::max(gap, r.f_global_optimal - r.f_global_teleclone);
  }
  s.add_flag("telecloning", "receivers' entanglement stays below log2 3", ceiling < 0.0,
             "max excess " + fmt(ceiling));
  s.add("telecloning", "telecloned global fidelity <= optimal two-state cloning", std::max(0.0, sandwich), 1e-9);
  s.add_flag("telecloning", "strict gap to optimal cloning somewhere in (0, pi/2)", gap > 1e-6,
             "largest gap " + fmt(gap));
}

void check_discrepancies(Suite& s) {
  const double computed = source_entropy(TwoStateEnsemble(kPi / 4));
  const double expect = binary_entropy(0.5 * (1.0 + std::sin(kPi / 4)));
  s.add("ensemble", "S(rho) at theta = pi/4 is the computed 0.6009 (not 0.907)",
        std::abs(computed - expect), 1e-12, "S = " + fmt(computed));
  const double quoted = von_neumann_entropy(quoted_receiver_matrix(universal_coeffs()));
  const double traced = alice_receivers_entanglement(build_telecloning_state(universal_coeffs()));
  const double quoted_expect = -(0.75 * std::log2(0.75) + 0.25 * std::log2(1.0 / 12.0));
  s.add("telecloning", "quoted receiver matrix entropy is 1.2075, traced state log2 3",
        std::max(std::abs(quoted - quoted_expect), std::abs(traced - std::log2(3.0))), 1e-9,
        "quoted " + fmt(quoted) + " traced " + fmt(traced));
}

void check_figures(Suite& s, const VerifyOptions& opt) {
  const std::string serial = to_csv_string(to_table(channel_sweep(kPi / 4, opt.alpha_steps, Execution::kSerial)));
  const std::string parallel = to_csv_string(to_table(channel_sweep(kPi / 4, opt.alpha_steps, Execution::kParallel)));
  const std::string classical_a = to_csv_string(to_table(classical_sweep(opt.theta_steps, Execution::kSerial)));
  const std::string classical_b = to_csv_string(to_table(classical_sweep(opt.theta_steps, Execution::kParallel)));
  s.add_flag("cli", "figure tables identical for serial and parallel sweeps",
             serial == parallel && classical_a == classical_b);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite s;
  check_qcore(s, options);
  check_ensemble(s, options);
  check_classical(s, options);
  check_channel(s, options);
  check_protocol(s, options);
  check_telecloning(s, options);
  check_discrepancies(s);
  check_figures(s, options);
  return s.take();
}

}  // namespace twostate
