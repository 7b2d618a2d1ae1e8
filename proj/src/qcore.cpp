#include "twostate/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twostate {
namespace {

std::size_t dim_of(int n_qubits) { return std::size_t{1} << n_qubits; }

void check_qubit_count(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n_qubits));
  }
}

// Bit position of qubit q inside a basis index of an n-qubit register.
int shift_of(int qubit, int n_qubits) { return n_qubits - 1 - qubit; }

int bit(std::size_t index, int qubit, int n_qubits) {
  return static_cast<int>((index >> shift_of(qubit, n_qubits)) & 1U);
}

// Builds a full-register index from the values of `selected` qubits (packed
// big-endian in `sel_bits`) and of the remaining qubits (packed in `rest_bits`).
std::size_t compose_index(const std::vector<int>& selected, std::size_t sel_bits,
                          const std::vector<int>& rest, std::size_t rest_bits, int n_qubits) {
  std::size_t index = 0;
  const int ns = static_cast<int>(selected.size());
  for (int k = 0; k < ns; ++k) {
    const std::size_t b = (sel_bits >> (ns - 1 - k)) & 1U;
    index |= b << shift_of(selected[static_cast<std::size_t>(k)], n_qubits);
  }
  const int nr = static_cast<int>(rest.size());
  for (int k = 0; k < nr; ++k) {
    const std::size_t b = (rest_bits >> (nr - 1 - k)) & 1U;
    index |= b << shift_of(rest[static_cast<std::size_t>(k)], n_qubits);
  }
  return index;
}

std::vector<int> sorted_subset(const std::vector<int>& keep, int n_qubits) {
  std::vector<int> out = keep;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("duplicate qubit index");
  }
  for (int q : out) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
    }
  }
  return out;
}

std::vector<int> complement(const std::vector<int>& subset, int n_qubits) {
  std::vector<int> rest;
  for (int q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(subset.begin(), subset.end(), q)) rest.push_back(q);
  }
  return rest;
}

}  // namespace

// --- PureState ---------------------------------------------------------------

PureState::PureState(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(n_qubits)) {
    throw std::invalid_argument("amplitude vector length must be 2^n_qubits");
  }
  const double norm_sq = amplitudes_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (|psi|^2 = " + std::to_string(norm_sq) +
                                ")");
  }
}

PureState PureState::normalized(int n_qubits, Vector v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  v /= norm;
  return PureState(n_qubits, std::move(v));
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  check_qubit_count(n_qubits);
  if (index >= dim_of(n_qubits)) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n_qubits, std::move(v));
}

PureState PureState::bloch(double theta, double phi) {
  Vector v(2);
  v << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
  return PureState::normalized(1, std::move(v));
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left operand
}

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(int n_qubits, Matrix elements)
    : n_qubits_(n_qubits), elements_(std::move(elements)) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (elements_.rows() != d || elements_.cols() != d) {
    throw std::invalid_argument("density matrix must be 2^n x 2^n");
  }
  const double herm_dev = (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm_dev) + ")");
  }
  const Complex tr = elements_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  const auto ev = eigenvalues();
  if (!ev.empty() && ev.front() < -kPsdTolerance) {
    throw std::invalid_argument("density matrix has a negative eigenvalue " +
                                std::to_string(ev.front()));
  }
}

DensityMatrix DensityMatrix::projector(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix(psi.n_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  return DensityMatrix(n_qubits, Matrix::Identity(d, d) / static_cast<double>(d));
}

std::vector<double> DensityMatrix::eigenvalues() const {
  const Matrix sym = 0.5 * (elements_ + elements_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// --- LocalOperator -----------------------------------------------------------

namespace {
void check_unitary(const Matrix2& u) {
  const double dev = (u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff();
  if (dev > kUnitaryTolerance) throw std::invalid_argument("local factor is not unitary");
}
}  // namespace

LocalOperator::LocalOperator(int n_qubits) {
  check_qubit_count(n_qubits);
  factors_.assign(static_cast<std::size_t>(n_qubits), Matrix2::Identity());
}

LocalOperator::LocalOperator(std::vector<Matrix2> factors) : factors_(std::move(factors)) {
  check_qubit_count(static_cast<int>(factors_.size()));
  for (const auto& u : factors_) check_unitary(u);
}

LocalOperator LocalOperator::uniform(int n_qubits, const Matrix2& u) {
  check_qubit_count(n_qubits);
  return LocalOperator(std::vector<Matrix2>(static_cast<std::size_t>(n_qubits), u));
}

LocalOperator& LocalOperator::set(int qubit, const Matrix2& u) {
  if (qubit < 0 || qubit >= n_qubits()) throw std::invalid_argument("qubit index out of range");
  check_unitary(u);
  factors_[static_cast<std::size_t>(qubit)] = u;
  return *this;
}

namespace gates {
Matrix2 identity() { return Matrix2::Identity(); }
Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}
Matrix2 pauli_y() {
  Matrix2 m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}
Matrix2 hadamard() {
  Matrix2 m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
}  // namespace gates

// --- Operations ---------------------------------------------------------------

std::array<Complex, 4> bell_vector(BellIndex index) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (index) {
    case BellIndex::kPhiPlus: return {r, 0, 0, r};
    case BellIndex::kPhiMinus: return {r, 0, 0, -r};
    case BellIndex::kPsiPlus: return {0, r, r, 0};
    case BellIndex::kPsiMinus: return {0, r, -r, 0};
  }
  throw std::invalid_argument("bad Bell index");
}

PureState tensor(const PureState& a, const PureState& b) {
  const Vector& va = a.amplitudes();
  const Vector& vb = b.amplitudes();
  Vector out(va.size() * vb.size());
  for (Eigen::Index i = 0; i < va.size(); ++i) {
    out.segment(i * vb.size(), vb.size()) = va(i) * vb;
  }
  return PureState::normalized(a.n_qubits() + b.n_qubits(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const int n = rho.n_qubits();
  const std::vector<int> kept = sorted_subset(keep, n);
  if (kept.empty() || static_cast<int>(kept.size()) == n) {
    throw std::invalid_argument("partial_trace: keep must be a nonempty proper subset");
  }
  const std::vector<int> traced = complement(kept, n);
  const std::size_t dk = dim_of(static_cast<int>(kept.size()));
  const std::size_t dt = dim_of(static_cast<int>(traced.size()));
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      Complex acc = 0;
      for (std::size_t t = 0; t < dt; ++t) {
        acc += rho(compose_index(kept, i, traced, t, n), compose_index(kept, j, traced, t, n));
      }
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(kept.size()), std::move(out));
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
  const int n = psi.n_qubits();
  const std::vector<int> kept = sorted_subset(keep, n);
  if (kept.empty()) throw std::invalid_argument("reduced_density: keep must be nonempty");
  const std::vector<int> traced = complement(kept, n);
  const std::size_t dk = dim_of(static_cast<int>(kept.size()));
  const std::size_t dt = dim_of(static_cast<int>(traced.size()));
  // Reshape into a dk x dt coefficient matrix; rho_kept = C C^dagger.
  Matrix coeff(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t t = 0; t < dt; ++t) {
      coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(t)) =
          psi[compose_index(kept, i, traced, t, n)];
    }
  }
  Matrix rho = coeff * coeff.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(static_cast<int>(kept.size()), std::move(rho));
}

double binary_entropy(double p) {
  double h = 0.0;
  for (double x : {p, 1.0 - p}) {
    if (x > kEigenCutoff) h -= x * std::log2(x);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda > kEigenCutoff) s -= lambda * std::log2(lambda);
  }
  return s;
}

std::array<BellOutcome, 4> bell_measure(const PureState& state, std::array<int, 2> pair) {
  const int n = state.n_qubits();
  if (n < 2) throw std::invalid_argument("bell_measure needs at least two qubits");
  if (pair[0] == pair[1]) throw std::invalid_argument("bell_measure: coincident qubit indices");
  for (int q : pair) {
    if (q < 0 || q >= n) throw std::invalid_argument("bell_measure: qubit index out of range");
  }
  const std::vector<int> measured = {pair[0], pair[1]};
  std::vector<int> sorted_pair = measured;
  std::sort(sorted_pair.begin(), sorted_pair.end());
  const std::vector<int> rest = complement(sorted_pair, n);
  const int n_rest = n - 2;
  const std::size_t d_rest = dim_of(n_rest);

  std::array<BellOutcome, 4> outcomes{
      BellOutcome{BellIndex::kPhiPlus, 0.0, PureState::basis(n_rest, 0)},
      BellOutcome{BellIndex::kPhiMinus, 0.0, PureState::basis(n_rest, 0)},
      BellOutcome{BellIndex::kPsiPlus, 0.0, PureState::basis(n_rest, 0)},
      BellOutcome{BellIndex::kPsiMinus, 0.0, PureState::basis(n_rest, 0)}};

  for (std::size_t k = 0; k < 4; ++k) {
    const auto bv = bell_vector(kBellIndices[k]);
    Vector branch = Vector::Zero(static_cast<Eigen::Index>(d_rest));
    for (std::size_t r = 0; r < d_rest; ++r) {
      Complex acc = 0;
      for (std::size_t ab = 0; ab < 4; ++ab) {
        if (bv[ab] == Complex(0)) continue;
        // `measured` keeps the caller's order: pair[0] is the first Bell qubit.
        acc += std::conj(bv[ab]) * state[compose_index(measured, ab, rest, r, n)];
      }
      branch(static_cast<Eigen::Index>(r)) = acc;
    }
    const double p = branch.squaredNorm();
    outcomes[k].probability = p;
    if (p > kNormTolerance) outcomes[k].post_state = PureState::normalized(n_rest, branch);
  }
  return outcomes;
}

Vector apply_single_qubit(const Matrix2& m, int qubit, int n_qubits, const Vector& amplitudes) {
  if (qubit < 0 || qubit >= n_qubits) throw std::invalid_argument("qubit index out of range");
  if (static_cast<std::size_t>(amplitudes.size()) != dim_of(n_qubits)) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  const std::size_t mask = std::size_t{1} << shift_of(qubit, n_qubits);
  Vector out = amplitudes;
  for (std::size_t i = 0; i < dim_of(n_qubits); ++i) {
    if (i & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | mask);
    out(i0) = m(0, 0) * amplitudes(i0) + m(0, 1) * amplitudes(i1);
    out(i1) = m(1, 0) * amplitudes(i0) + m(1, 1) * amplitudes(i1);
  }
  return out;
}

PureState apply_local(const LocalOperator& op, const PureState& state) {
  if (op.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("apply_local: operator and state sizes differ");
  }
  Vector v = state.amplitudes();
  for (int q = 0; q < op.n_qubits(); ++q) {
    if (op.at(q).isIdentity(0.0)) continue;
    v = apply_single_qubit(op.at(q), q, state.n_qubits(), v);
  }
  return PureState(state.n_qubits(), std::move(v));
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  const Vector& v = psi.amplitudes();
  const Complex f = v.dot(rho.elements() * v);
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace twostate
