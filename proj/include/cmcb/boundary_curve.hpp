#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmcb {

/// Unit-speed boundary arc sampled as (arclength, geodesic curvature) pairs.
/// Curvature is taken to be piecewise linear between samples.
template <typename Scalar = double>
class BoundaryCurve {
 public:
  struct Sample {
    Scalar s;
    Scalar kappa;
  };

  explicit BoundaryCurve(std::vector<Sample> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) throw std::invalid_argument("BoundaryCurve: need at least two samples");
    if (samples_.front().s != Scalar(0)) {
      throw std::invalid_argument("BoundaryCurve: arclength must start at 0");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      if (i > 0 && !(samples_[i].s > samples_[i - 1].s)) {
        throw std::invalid_argument("BoundaryCurve: arclength not strictly increasing at sample " +
                                    std::to_string(i));
      }
      if (!(samples_[i].kappa < 0)) {
        throw std::invalid_argument("BoundaryCurve: curvature must be negative (sample " +
                                    std::to_string(i) + ")");
      }
    }
  }

  /// Constant curvature kappa over [0, length], sampled at n + 1 points.
  static BoundaryCurve constant(Scalar kappa, Scalar length, std::size_t n = 1) {
    std::vector<Sample> s;
    s.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) s.push_back({length * Scalar(i) / Scalar(n), kappa});
    return BoundaryCurve(std::move(s));
  }

  /// Samples kappa_of(s) at n + 1 evenly spaced points of [0, length].
  template <typename F>
  static BoundaryCurve sampled(F&& kappa_of, Scalar length, std::size_t n) {
    std::vector<Sample> s;
    s.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const Scalar at = length * Scalar(i) / Scalar(n);
      s.push_back({at, kappa_of(at)});
    }
    return BoundaryCurve(std::move(s));
  }

  const std::vector<Sample>& samples() const { return samples_; }
  Scalar length() const { return samples_.back().s; }

  /// Trapezoid rule; exact for the piecewise-linear interpolant.
  Scalar total_curvature() const {
    Scalar sum = 0;
    for (std::size_t i = 1; i < samples_.size(); ++i) {
      sum += (samples_[i].s - samples_[i - 1].s) * (samples_[i].kappa + samples_[i - 1].kappa) / 2;
    }
    return sum;
  }

  /// Linear interpolation of kappa at arclength s in [0, length].
  Scalar kappa_at(Scalar s) const {
    if (s <= samples_.front().s) return samples_.front().kappa;
    if (s >= samples_.back().s) return samples_.back().kappa;
    std::size_t lo = 0;
    std::size_t hi = samples_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (samples_[mid].s <= s ? lo : hi) = mid;
    }
    const Scalar w = (s - samples_[lo].s) / (samples_[hi].s - samples_[lo].s);
    return samples_[lo].kappa + w * (samples_[hi].kappa - samples_[lo].kappa);
  }

  /// Metric rescaling: lengths by `factor`, curvatures by 1/factor.
  BoundaryCurve scaled(Scalar factor) const {
    std::vector<Sample> s = samples_;
    for (auto& x : s) {
      x.s *= factor;
      x.kappa /= factor;
    }
    return BoundaryCurve(std::move(s));
  }

 private:
  std::vector<Sample> samples_;
};

/// Reads CSV with header `s,kappa`.
BoundaryCurve<double> read_boundary_curve_csv(std::istream& in);
void write_boundary_curve_csv(std::ostream& out, const BoundaryCurve<double>& curve);

}  // namespace cmcb
