#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace twostate {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi]. Stops
/// once the bracket is narrower than `x_tol`.
template <class F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-10,
                                  int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  int it = 0;
  for (; it < max_iterations && (b - a) > x_tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarMax out;
  out.x = fc >= fd ? c : d;
  out.value = fc >= fd ? fc : fd;
  out.iterations = it;
  return out;
}

struct VectorMax2 {
  std::array<double, 2> x{};
  double value = 0.0;
  int iterations = 0;
};

/// Nelder-Mead maximization in two variables. The objective is evaluated at
/// points clamped into the box [lo, hi], so the returned point is feasible.
VectorMax2 nelder_mead_maximize(const std::function<double(std::array<double, 2>)>& f,
                                std::array<double, 2> start, double step,
                                std::array<double, 2> lo, std::array<double, 2> hi,
                                double f_tol = 1e-14, int max_iterations = 2000);

}  // namespace twostate
