#include "twostate/telecloning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "twostate/optimize.hpp"

namespace twostate {

namespace {

constexpr double kCoeffNormTolerance = 1e-10;

// Basis index on (ancilla, B, C).
constexpr std::size_t idx3(int anc, int b, int c) {
  return static_cast<std::size_t>(anc * 4 + b * 2 + c);
}

}  // namespace

CloneCoeffs::CloneCoeffs(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("clone coefficients must be >= 0");
  const double norm = a * a + 2 * b * b + c * c;
  if (std::abs(norm - 1.0) > kCoeffNormTolerance) {
    throw std::invalid_argument("clone coefficients violate a^2 + 2b^2 + c^2 = 1");
  }
}

CloneCoeffs CloneCoeffs::from_angles(double u, double v) {
  const double su = std::sin(u);
  return CloneCoeffs(std::abs(std::cos(u)), std::abs(su * std::cos(v)) / std::sqrt(2.0),
                     std::abs(su * std::sin(v)));
}

CloneCoeffs universal_coeffs() { return CloneCoeffs(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 6.0), 0.0); }

std::pair<PureState, PureState> build_clone_states(const CloneCoeffs& k) {
  Vector phi0 = Vector::Zero(8);
  phi0(idx3(0, 0, 0)) = k.a();
  phi0(idx3(1, 0, 1)) = k.b();
  phi0(idx3(1, 1, 0)) = k.b();
  phi0(idx3(0, 1, 1)) = k.c();
  Vector phi1 = Vector::Zero(8);
  phi1(idx3(1, 0, 0)) = k.c();
  phi1(idx3(0, 0, 1)) = k.b();
  phi1(idx3(0, 1, 0)) = k.b();
  phi1(idx3(1, 1, 1)) = k.a();
  return {PureState::normalized(3, std::move(phi0)), PureState::normalized(3, std::move(phi1))};
}

TelecloningSystem build_telecloning_state(const CloneCoeffs& coeffs) {
  const auto [phi0, phi1] = build_clone_states(coeffs);
  Vector v(16);
  v.head(8) = phi0.amplitudes() / std::sqrt(2.0);
  v.tail(8) = phi1.amplitudes() / std::sqrt(2.0);
  return TelecloningSystem{PureState::normalized(4, std::move(v)), coeffs};
}

ProtocolSpec telecloning_protocol(const TelecloningSystem& system, std::vector<int> targets) {
  ProtocolSpec spec{system.state, {0, 1}, {}, std::move(targets)};
  for (BellIndex k : kBellIndices) {
    spec.corrections.emplace(k, LocalOperator::uniform(3, standard_correction(k)));
  }
  return spec;
}

namespace {
DensityMatrix mix(const std::array<ProtocolOutcome, 4>& outcomes, const std::vector<int>& keep) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << keep.size());
  Matrix acc = Matrix::Zero(d, d);
  for (const auto& o : outcomes) {
    if (o.probability <= kNormTolerance) continue;
    acc += o.probability * reduced_density(o.corrected_state, keep).elements();
  }
  acc /= acc.trace().real();
  return DensityMatrix(static_cast<int>(keep.size()), 0.5 * (acc + acc.adjoint()));
}
}  // namespace

TelecloneResult teleclone(const PureState& input, const TelecloningSystem& system) {
  if (input.n_qubits() != 1) throw std::invalid_argument("teleclone input must be one qubit");
  const auto outcomes = enumerate_protocol(input, telecloning_protocol(system));
  TelecloneResult result{
      {TelecloneBranch{outcomes[0].index, outcomes[0].probability, outcomes[0].corrected_state},
       TelecloneBranch{outcomes[1].index, outcomes[1].probability, outcomes[1].corrected_state},
       TelecloneBranch{outcomes[2].index, outcomes[2].probability, outcomes[2].corrected_state},
       TelecloneBranch{outcomes[3].index, outcomes[3].probability, outcomes[3].corrected_state}},
      mix(outcomes, {1}),
      mix(outcomes, {2}),
      mix(outcomes, {1, 2})};
  return result;
}

PureState apply_cloner(const PureState& input, const CloneCoeffs& coeffs) {
  if (input.n_qubits() != 1) throw std::invalid_argument("cloner input must be one qubit");
  const auto [phi0, phi1] = build_clone_states(coeffs);
  return PureState::normalized(3, input[0] * phi0.amplitudes() + input[1] * phi1.amplitudes());
}

double global_clone_fidelity(const TwoStateEnsemble& ens, const CloneCoeffs& coeffs) {
  const TelecloningSystem system = build_telecloning_state(coeffs);
  const auto [psi1, psi2] = make_states(ens);
  double f = 0.0;
  for (const PureState* psi : {&psi1, &psi2}) {
    f += fidelity(tensor(*psi, *psi), teleclone(*psi, system).joint_clones);
  }
  return 0.5 * f;
}

double local_clone_global_fidelity(const TwoStateEnsemble& ens, const CloneCoeffs& coeffs) {
  const auto [psi1, psi2] = make_states(ens);
  double f = 0.0;
  for (const PureState* psi : {&psi1, &psi2}) {
    f += fidelity(tensor(*psi, *psi), reduced_density(apply_cloner(*psi, coeffs), {1, 2}));
  }
  return 0.5 * f;
}

CloneCoeffs optimize_coeffs(const TwoStateEnsemble& ens) {
  auto objective = [&](std::array<double, 2> p) {
    return global_clone_fidelity(ens, CloneCoeffs::from_angles(p[0], p[1]));
  };
  constexpr int kGrid = 7;
  std::array<double, 2> start{0.0, 0.0};
  double best = -1.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const std::array<double, 2> p{kHalfPi * i / (kGrid - 1), kHalfPi * j / (kGrid - 1)};
      const double f = objective(p);
      if (f > best) {
        best = f;
        start = p;
      }
    }
  }
  // from_angles is valid for any real angles, so the simplex is left free;
  // clamping would let it collapse onto the c = 0 or b = 0 edge.
  const VectorMax2 refined = nelder_mead_maximize(objective, start, kHalfPi / (kGrid - 1),
                                                  {-2 * kPi, -2 * kPi}, {2 * kPi, 2 * kPi});
  const auto& p = refined.value >= best ? refined.x : start;
  return CloneCoeffs::from_angles(p[0], p[1]);
}

namespace {

// chi1 = p|00> + q (|01> + |10>)/sqrt(2) + r|11>, chi2 its 0<->1 mirror.
// With p = (u + w)/sqrt(2), r = (u - w)/sqrt(2) the constraints become
// w^2 = (1 - s)/2 and u^2 + q^2 = (1 + s)/2, leaving one angle free.
double mirrored_pair_fidelity(const TwoStateEnsemble& ens, double angle, double w_sign) {
  const double s = overlap(ens);
  const double w = w_sign * std::sqrt(std::max(0.0, (1.0 - s) / 2));
  const double radius = std::sqrt((1.0 + s) / 2);
  const double u = radius * std::cos(angle);
  const double q = radius * std::sin(angle);
  const double p = (u + w) / std::sqrt(2.0), r = (u - w) / std::sqrt(2.0);
  const double qs = q / std::sqrt(2.0);
  Vector c1(4), c2(4);
  c1 << p, qs, qs, r;
  c2 << r, qs, qs, p;
  const PureState chi1 = PureState::normalized(2, c1);
  const PureState chi2 = PureState::normalized(2, c2);
  const auto [psi1, psi2] = make_states(ens);
  return 0.5 * (std::norm(inner(tensor(psi1, psi1), chi1)) + std::norm(inner(tensor(psi2, psi2), chi2)));
}

}  // namespace

double optimal_global_fidelity(const TwoStateEnsemble& ens) {
  constexpr int kGrid = 720;
  double best = -1.0;
  for (double sign : {1.0, -1.0}) {
    int best_i = 0;
    double best_f = -1.0;
    for (int i = 0; i < kGrid; ++i) {
      const double f = mirrored_pair_fidelity(ens, 2 * kPi * i / kGrid, sign);
      if (f > best_f) {
        best_f = f;
        best_i = i;
      }
    }
    const double h = 2 * kPi / kGrid;
    const ScalarMax refined = golden_section_maximize(
        [&](double a) { return mirrored_pair_fidelity(ens, a, sign); }, h * (best_i - 1),
        h * (best_i + 1), 1e-12);
    best = std::max({best, best_f, refined.value});
  }
  return best;
}

double alice_receivers_entanglement(const TelecloningSystem& system) {
  return von_neumann_entropy(reduced_density(system.state, {2, 3}));
}

DensityMatrix quoted_receiver_matrix(const CloneCoeffs& k) {
  const double diag = k.a() * k.a() + k.b() * k.b() + k.c() * k.c();
  const double corner = 2 * k.a() * (k.b() + k.c());
  const double b2 = k.b() * k.b();
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = diag;
  m(3, 3) = diag;
  m(1, 1) = b2;
  m(2, 2) = b2;
  m(0, 3) = corner;
  m(3, 0) = corner;
  return DensityMatrix(2, 0.5 * m);
}

}  // namespace twostate
