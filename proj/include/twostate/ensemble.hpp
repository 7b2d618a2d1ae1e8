#pragma once

#include <utility>

#include "twostate/qcore.hpp"

namespace twostate {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2;

/// Equal-prior pair cos(t/2)|0> + sin(t/2)|1>, sin(t/2)|0> + cos(t/2)|1>,
/// with t in [0, pi/2]. t = 0 gives orthogonal states, t = pi/2 identical ones.
class TwoStateEnsemble {
 public:
  explicit TwoStateEnsemble(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Pure entangled resource alpha|00> + beta|11>, 0 <= alpha <= beta.
class Channel {
 public:
  /// alpha in [0, 1/sqrt(2)]; beta is derived.
  explicit Channel(double alpha);
  static Channel from_alpha_sq(double alpha_sq);
  static Channel maximal();

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  PureState state() const;

 private:
  double alpha_;
  double beta_;
};

std::pair<PureState, PureState> make_states(const TwoStateEnsemble& ens);

/// |<psi1|psi2>| = sin(theta)
double overlap(const TwoStateEnsemble& ens);

/// Equal mixture of the two signal states.
DensityMatrix ensemble_density(const TwoStateEnsemble& ens);

/// Entropy (bits) of the ensemble density: the ebits needed per signal qubit
/// in the many-copy limit. Equals H((1 + sin theta) / 2).
double source_entropy(const TwoStateEnsemble& ens);

}  // namespace twostate
