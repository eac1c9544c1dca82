#pragma once

// Hyperbolic plane in the hyperboloid model {<x,x>_L = -1, x3 > 0} of
// Lorentz-Minkowski 3-space, plus the collar-area closed forms built on it.

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "cmcb/boundary_curve.hpp"

namespace cmcb::hyperbolic {

template <typename Scalar>
using LorentzVector = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
struct Tolerance {
  // constraint slack for points and tangent vectors built by callers
  static constexpr Scalar constraint() { return Scalar(1e-12); }
};

/// u1 v1 + u2 v2 - u3 v3
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar lorentz_inner(const Eigen::MatrixBase<DerivedA>& u,
                                        const Eigen::MatrixBase<DerivedB>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
  return u(0) * v(0) + u(1) * v(1) - u(2) * v(2);
}

/// Lorentz norm of a spacelike vector.
template <typename Derived>
typename Derived::Scalar lorentz_norm(const Eigen::MatrixBase<Derived>& v) {
  using std::sqrt;
  const auto q = lorentz_inner(v, v);
  if (q < 0) throw std::domain_error("lorentz_norm: vector is timelike");
  return sqrt(q);
}

/// J (u x v) with J = diag(1, 1, -1); Lorentz-orthogonal to both arguments.
template <typename Scalar>
LorentzVector<Scalar> lorentz_cross(const LorentzVector<Scalar>& u,
                                    const LorentzVector<Scalar>& v) {
  LorentzVector<Scalar> c = u.cross(v);
  c(2) = -c(2);
  return c;
}

template <typename Scalar>
class HyperbolicPoint {
 public:
  explicit HyperbolicPoint(const LorentzVector<Scalar>& position,
                           Scalar tol = Tolerance<Scalar>::constraint())
      : position_(position) {
    using std::abs;
    if (!(position_(2) > 0) || abs(lorentz_inner(position_, position_) + 1) > tol) {
      throw std::domain_error("HyperbolicPoint: not on the upper hyperboloid sheet");
    }
  }

  /// The point (0, 0, 1).
  static HyperbolicPoint origin() { return HyperbolicPoint(LorentzVector<Scalar>(0, 0, 1)); }

  const LorentzVector<Scalar>& position() const { return position_; }

 private:
  LorentzVector<Scalar> position_;
};

template <typename Scalar>
class TangentVector {
 public:
  TangentVector(const HyperbolicPoint<Scalar>& base, const LorentzVector<Scalar>& direction,
                Scalar tol = Tolerance<Scalar>::constraint())
      : base_(base), direction_(direction) {
    using std::abs;
    if (abs(lorentz_inner(base_.position(), direction_)) > tol) {
      throw std::domain_error("TangentVector: direction not Lorentz-orthogonal to base");
    }
  }

  const HyperbolicPoint<Scalar>& base() const { return base_; }
  const LorentzVector<Scalar>& direction() const { return direction_; }
  Scalar norm() const { return lorentz_norm(direction_); }

 private:
  HyperbolicPoint<Scalar> base_;
  LorentzVector<Scalar> direction_;
};

namespace detail {

template <typename Scalar>
Scalar nonzero_speed(const TangentVector<Scalar>& v, const char* who) {
  const Scalar speed = v.norm();
  if (!(speed > 0)) throw std::domain_error(std::string(who) + ": zero initial velocity");
  return speed;
}

}  // namespace detail

/// Hyperbolic distance arccosh(-<p,q>_L).
template <typename Scalar>
Scalar distance(const HyperbolicPoint<Scalar>& p, const HyperbolicPoint<Scalar>& q) {
  using std::acosh;
  using std::max;
  return acosh(max(Scalar(1), -lorentz_inner(p.position(), q.position())));
}

/// gamma(t) = cosh(|v| t) x + sinh(|v| t) / |v| v
template <typename Scalar>
HyperbolicPoint<Scalar> geodesic(const TangentVector<Scalar>& v, Scalar t) {
  using std::cosh;
  using std::sinh;
  const Scalar speed = detail::nonzero_speed(v, "geodesic");
  const LorentzVector<Scalar> x =
      cosh(speed * t) * v.base().position() + (sinh(speed * t) / speed) * v.direction();
  // rounding in cosh/sinh grows like e^{2|v|t}; renormalize onto the sheet
  const Scalar q = -lorentz_inner(x, x);
  using std::sqrt;
  return HyperbolicPoint<Scalar>(x / sqrt(q), Scalar(1e-6));
}

/// Velocity of the geodesic at time t.
template <typename Scalar>
TangentVector<Scalar> geodesic_velocity(const TangentVector<Scalar>& v, Scalar t) {
  using std::cosh;
  using std::sinh;
  const Scalar speed = detail::nonzero_speed(v, "geodesic_velocity");
  const HyperbolicPoint<Scalar> at = geodesic(v, t);
  LorentzVector<Scalar> dir =
      speed * sinh(speed * t) * v.base().position() + cosh(speed * t) * v.direction();
  // strip the normal component left by rounding
  dir += lorentz_inner(dir, at.position()) * at.position();
  return TangentVector<Scalar>(at, dir, Scalar(1e-6));
}

/// Parallel transport of w along the geodesic with initial velocity v:
///   w + <v,w>_L / |v|^2 (gamma'(t) - v)
template <typename Scalar>
TangentVector<Scalar> parallel_transport(const TangentVector<Scalar>& v,
                                         const TangentVector<Scalar>& w, Scalar t) {
  using std::abs;
  const Scalar speed = detail::nonzero_speed(v, "parallel_transport");
  if ((v.base().position() - w.base().position()).cwiseAbs().maxCoeff() >
      Scalar(1e-12) * (Scalar(1) + v.base().position().cwiseAbs().maxCoeff())) {
    throw std::domain_error("parallel_transport: v and w are based at different points");
  }
  const TangentVector<Scalar> velocity = geodesic_velocity(v, t);
  LorentzVector<Scalar> out =
      w.direction() + (lorentz_inner(v.direction(), w.direction()) / (speed * speed)) *
                          (velocity.direction() - v.direction());
  out += lorentz_inner(out, velocity.base().position()) * velocity.base().position();
  return TangentVector<Scalar>(velocity.base(), out, Scalar(1e-6));
}

/// Length factor of the normal Jacobi field along an equidistant family:
/// cosh(t) - kappa sinh(t). f(0) = 1, f'(0) = -kappa.
template <typename Scalar>
Scalar jacobi_factor(Scalar kappa, Scalar t) {
  using std::cosh;
  using std::sinh;
  return cosh(t) - kappa * sinh(t);
}

/// Geodesic curvature of the curve at distance r on the non-convex side of a
/// curve with curvature kappa < 0 (curvature -1 model).
template <typename Scalar>
Scalar equidistant_curvature(Scalar kappa, Scalar r) {
  using std::tanh;
  if (!(kappa < 0)) throw std::domain_error("equidistant_curvature: kappa must be negative");
  if (!(r >= 0)) throw std::domain_error("equidistant_curvature: r must be nonnegative");
  const Scalar th = tanh(r);
  return (kappa - th) / (1 - th * kappa);
}

/// Quarter-turn in the tangent plane at p, R(t) = J (p x t). This fixes the
/// orientation convention: curvature kappa is measured against R(alpha').
template <typename Scalar>
TangentVector<Scalar> rotate_quarter(const TangentVector<Scalar>& t) {
  return TangentVector<Scalar>(t.base(), lorentz_cross(t.base().position(), t.direction()),
                               Scalar(1e-10));
}

/// cosh(r) p + sinh(r) R(tangent), the point at distance r along the
/// geodesic normal to the unit tangent.
template <typename Scalar>
HyperbolicPoint<Scalar> equidistant_point(const TangentVector<Scalar>& unit_tangent, Scalar r) {
  using std::abs;
  using std::cosh;
  using std::sinh;
  if (abs(unit_tangent.norm() - 1) > Scalar(1e-10)) {
    throw std::domain_error("equidistant_point: tangent is not unit length");
  }
  if (!(r >= 0)) throw std::domain_error("equidistant_point: r must be nonnegative");
  const LorentzVector<Scalar> normal = rotate_quarter(unit_tangent).direction();
  const LorentzVector<Scalar> x = cosh(r) * unit_tangent.base().position() + sinh(r) * normal;
  return HyperbolicPoint<Scalar>(x, Scalar(1e-8) * cosh(2 * r));
}

/// Area of the collar of width r over a boundary arc in the plane of constant
/// curvature K1 < 0:
///   (1/k) [ (1 - cosh(sqrt(k) r)) int kappa ds + l sqrt(k) sinh(sqrt(k) r) ],  k = -K1,
/// with kappa and l measured in the curvature-K1 metric.
template <typename Scalar>
Scalar collar_area(const BoundaryCurve<Scalar>& curve, Scalar r, Scalar K1) {
  using std::cosh;
  using std::sinh;
  using std::sqrt;
  if (!(K1 < 0)) throw std::domain_error("collar_area: K1 must be negative");
  if (!(r >= 0)) throw std::domain_error("collar_area: r must be nonnegative");
  const Scalar k = -K1;
  const Scalar rk = sqrt(k);
  return ((1 - cosh(rk * r)) * curve.total_curvature() +
          curve.length() * rk * sinh(rk * r)) /
         k;
}

/// Curvature -1 specialization: (1 - cosh r) int kappa ds + l sinh r.
template <typename Scalar>
Scalar collar_area_unit(const BoundaryCurve<Scalar>& curve, Scalar r) {
  using std::cosh;
  using std::sinh;
  if (!(r >= 0)) throw std::domain_error("collar_area_unit: r must be nonnegative");
  return (1 - cosh(r)) * curve.total_curvature() + curve.length() * sinh(r);
}

/// Total geodesic curvature of the equidistant arc at distance r (curvature -1):
///   cosh(r) int kappa ds - l sinh(r).
template <typename Scalar>
Scalar equidistant_total_curvature(const BoundaryCurve<Scalar>& curve, Scalar r) {
  using std::cosh;
  using std::sinh;
  if (!(r >= 0)) throw std::domain_error("equidistant_total_curvature: r must be nonnegative");
  return cosh(r) * curve.total_curvature() - curve.length() * sinh(r);
}

}  // namespace cmcb::hyperbolic
