#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fluxcnot {

struct NelderMeadOptions {
  int max_evaluations = 500;
  /// Converged once the spread of objective values across the simplex
  /// drops below this.
  double f_tolerance = 1e-8;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
  /// Best point after every iteration that improved it.
  std::vector<std::pair<Eigen::VectorXd, double>> trace;
};

// Downhill simplex with the standard coefficients (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). The initial simplex is x0 plus one vertex per
// axis displaced by `scales`.
template <typename Objective>
NelderMeadResult nelder_mead(Objective&& objective, const Eigen::VectorXd& x0,
                             const Eigen::VectorXd& scales, const NelderMeadOptions& options = {}) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  NelderMeadResult result;

  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return objective(x);
  };

  for (int i = 0; i < n; ++i) pts[i + 1](i) += scales(i);
  for (int i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<int> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
  };

  sort_simplex();
  result.trace.emplace_back(pts[order[0]], vals[order[0]]);

  while (true) {
    const int best = order[0];
    const int worst = order[n];
    const int second = order[n - 1];
    if (vals[worst] - vals[best] < options.f_tolerance) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[order[i]];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
    const double f_r = eval(reflected);
    if (f_r < vals[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double f_e = eval(expanded);
      if (f_e < f_r) {
        pts[worst] = expanded;
        vals[worst] = f_e;
      } else {
        pts[worst] = reflected;
        vals[worst] = f_r;
      }
    } else if (f_r < vals[second]) {
      pts[worst] = reflected;
      vals[worst] = f_r;
    } else {
      const bool outside = f_r < vals[worst];
      const Eigen::VectorXd contracted =
          outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                  : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
      const double f_c = eval(contracted);
      if (f_c < (outside ? f_r : vals[worst])) {
        pts[worst] = contracted;
        vals[worst] = f_c;
      } else {
        for (int i = 1; i <= n; ++i) {
          const int k = order[i];
          pts[k] = pts[best] + 0.5 * (pts[k] - pts[best]);
          vals[k] = eval(pts[k]);
        }
      }
    }

    const double previous_best = vals[order[0]];
    sort_simplex();
    if (vals[order[0]] < previous_best) result.trace.emplace_back(pts[order[0]], vals[order[0]]);
  }

  result.x = pts[order[0]];
  result.f = vals[order[0]];
  return result;
}

}  // namespace fluxcnot
