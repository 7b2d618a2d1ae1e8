#pragma once

// Dense complex linear algebra for small qubit registers (at most a handful of
// qubits, dimension <= 32). Qubit 0 is the most significant bit of a basis
// index, so |q0 q1 ... q_{n-1}> maps to index q0*2^{n-1} + ... + q_{n-1}.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace twostate {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kEigenCutoff = 1e-12;
inline constexpr int kMaxQubits = 10;

/// Normalized amplitude vector over n qubits.
///
/// A zero-qubit state (dimension 1) is permitted; it is what remains after a
/// Bell measurement consumes both qubits of a two-qubit register.
class PureState {
 public:
  PureState(int n_qubits, Vector amplitudes);

  /// Rescales `v` to unit norm. Throws if the vector is (numerically) zero.
  static PureState normalized(int n_qubits, Vector v);
  static PureState basis(int n_qubits, std::size_t index);
  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
  static PureState bloch(double theta, double phi = 0.0);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_(static_cast<Eigen::Index>(i)); }

 private:
  int n_qubits_;
  Vector amplitudes_;
};

/// <a|b>
Complex inner(const PureState& a, const PureState& b);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Matrix elements);

  static DensityMatrix projector(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(elements_.rows()); }
  const Matrix& elements() const { return elements_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return elements_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// Ascending eigenvalues of the symmetrized matrix.
  std::vector<double> eigenvalues() const;

 private:
  int n_qubits_;
  Matrix elements_;
};

/// Product of single-qubit unitaries, one slot per qubit (identity by default).
class LocalOperator {
 public:
  explicit LocalOperator(int n_qubits);
  explicit LocalOperator(std::vector<Matrix2> factors);

  /// Same unitary on every qubit.
  static LocalOperator uniform(int n_qubits, const Matrix2& u);

  LocalOperator& set(int qubit, const Matrix2& u);

  int n_qubits() const { return static_cast<int>(factors_.size()); }
  const Matrix2& at(int qubit) const { return factors_.at(static_cast<std::size_t>(qubit)); }

 private:
  std::vector<Matrix2> factors_;
};

namespace gates {
Matrix2 identity();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 hadamard();
}  // namespace gates

/// Bell basis in the order |phi+>, |phi->, |psi+>, |psi->, labelled 1..4.
enum class BellIndex : int { kPhiPlus = 1, kPhiMinus = 2, kPsiPlus = 3, kPsiMinus = 4 };

inline constexpr std::array<BellIndex, 4> kBellIndices = {
    BellIndex::kPhiPlus, BellIndex::kPhiMinus, BellIndex::kPsiPlus, BellIndex::kPsiMinus};

/// Two-qubit amplitudes (|00>,|01>,|10>,|11>) of the given Bell vector.
std::array<Complex, 4> bell_vector(BellIndex index);

struct BellOutcome {
  BellIndex index;
  double probability;
  // Renormalized state of the unmeasured qubits, in ascending qubit order.
  // For outcomes with probability <= kNormTolerance this is |0...0>.
  PureState post_state;
};

PureState tensor(const PureState& a, const PureState& b);

/// Reduced state on `keep` (a nonempty proper subset), kept qubits in
/// ascending order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Reduced state of a pure state. `keep` may be the full register.
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

/// Entropy in bits; eigenvalues below kEigenCutoff count as zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// H(p) in bits.
double binary_entropy(double p);

/// Projects `pair` (first, second) onto the Bell basis.
std::array<BellOutcome, 4> bell_measure(const PureState& state, std::array<int, 2> pair);

PureState apply_local(const LocalOperator& op, const PureState& state);

/// Applies an arbitrary 2x2 matrix to one qubit without renormalizing.
Vector apply_single_qubit(const Matrix2& m, int qubit, int n_qubits, const Vector& amplitudes);

/// <psi|rho|psi>
double fidelity(const PureState& psi, const DensityMatrix& rho);

}  // namespace twostate
