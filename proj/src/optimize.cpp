#include "twostate/optimize.hpp"

#include <algorithm>

namespace twostate {

VectorMax2 nelder_mead_maximize(const std::function<double(std::array<double, 2>)>& f,
                                std::array<double, 2> start, double step,
                                std::array<double, 2> lo, std::array<double, 2> hi,
                                double f_tol, int max_iterations) {
  using Point = std::array<double, 2>;
  auto clamp = [&](Point p) {
    for (std::size_t k = 0; k < 2; ++k) p[k] = std::clamp(p[k], lo[k], hi[k]);
    return p;
  };
  auto eval = [&](const Point& p) { return f(clamp(p)); };
  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  std::array<Point, 3> pts = {start, Point{start[0] + step, start[1]},
                              Point{start[0], start[1] + step}};
  for (auto& p : pts) p = clamp(p);
  std::array<double, 3> vals{};
  for (std::size_t i = 0; i < 3; ++i) vals[i] = eval(pts[i]);

  int it = 0;
  for (; it < max_iterations; ++it) {
    // Order best (largest) first.
    std::array<std::size_t, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    std::array<Point, 3> p2{pts[idx[0]], pts[idx[1]], pts[idx[2]]};
    std::array<double, 3> v2{vals[idx[0]], vals[idx[1]], vals[idx[2]]};
    pts = p2;
    vals = v2;

    double diameter = 0.0;
    for (std::size_t i = 1; i < 3; ++i) {
      diameter = std::max({diameter, std::abs(pts[i][0] - pts[0][0]), std::abs(pts[i][1] - pts[0][1])});
    }
    if (vals[0] - vals[2] < f_tol && diameter < 1e-10) break;

    const Point centroid = lerp(pts[0], pts[1], 0.5);
    const Point reflected = clamp(lerp(pts[2], centroid, 2.0));
    const double fr = eval(reflected);
    if (fr > vals[0]) {
      const Point expanded = clamp(lerp(pts[2], centroid, 3.0));
      const double fe = eval(expanded);
      if (fe > fr) {
        pts[2] = expanded;
        vals[2] = fe;
      } else {
        pts[2] = reflected;
        vals[2] = fr;
      }
      continue;
    }
    if (fr > vals[1]) {
      pts[2] = reflected;
      vals[2] = fr;
      continue;
    }
    const Point contracted =
        fr > vals[2] ? lerp(centroid, reflected, 0.5) : lerp(centroid, pts[2], 0.5);
    const double fc = eval(contracted);
    if (fc > std::max(fr, vals[2])) {
      pts[2] = contracted;
      vals[2] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 1; i < 3; ++i) {
      pts[i] = lerp(pts[0], pts[i], 0.5);
      vals[i] = eval(pts[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
  return VectorMax2{clamp(pts[best]), vals[best], it};
}

}  // namespace twostate
