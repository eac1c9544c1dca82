#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace cmcb {

/// n-point Gauss-Legendre rule on [-1, 1], nodes from the Golub-Welsch
/// eigenproblem of the Jacobi matrix.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: need at least one node");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
      const double b = k / std::sqrt(4.0 * k * k - 1);
      J(k, k - 1) = b;
      J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes_ = es.eigenvalues();
    weights_ = 2 * es.eigenvectors().row(0).transpose().array().square();
  }

  int size() const { return int(nodes_.size()); }
  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& weights() const { return weights_; }

  template <typename F>
  double integrate(F&& f, double a, double b) const {
    const double half = (b - a) / 2;
    const double mid = (a + b) / 2;
    double sum = 0;
    for (int i = 0; i < size(); ++i) sum += weights_(i) * f(mid + half * nodes_(i));
    return half * sum;
  }

  /// Composite rule over `panels` equal subintervals.
  template <typename F>
  double integrate(F&& f, double a, double b, int panels) const {
    double sum = 0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) sum += integrate(f, a + p * h, a + (p + 1) * h);
    return sum;
  }

 private:
  Eigen::VectorXd nodes_;
  Eigen::VectorXd weights_;
};

}  // namespace cmcb
