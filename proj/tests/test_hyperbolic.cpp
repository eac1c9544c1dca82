#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cmcb/hyperbolic.hpp"
#include "cmcb/oracles.hpp"
#include "cmcb/quadrature.hpp"

using namespace cmcb;
using namespace cmcb::hyperbolic;
using V = LorentzVector<double>;

namespace {

TangentVector<double> tangent(const V& x, const V& v) {
  return TangentVector<double>(HyperbolicPoint<double>(x), v);
}

// point and tangent away from the origin
V boosted_point() {
  const double a = 0.7, b = -0.4;
  return V(std::sinh(a) * std::cos(b), std::sinh(a) * std::sin(b), std::cosh(a));
}

V tangent_at(const V& x, const V& seed) {
  V v = seed + lorentz_inner(seed, x) * x;
  return v;
}

}  // namespace

TEST_CASE("lorentz inner product") {
  CHECK(lorentz_inner(V(1, 0, 0), V(1, 0, 0)) == 1);
  CHECK(lorentz_inner(V(0, 0, 1), V(0, 0, 1)) == -1);
  CHECK(lorentz_inner(V(1, 2, 3), V(4, 5, 6)) == -4);
  CHECK_THROWS_AS(lorentz_norm(V(0, 0, 1)), std::domain_error);
}

TEST_CASE("points and tangents are validated") {
  CHECK_THROWS_AS(HyperbolicPoint<double>(V(0, 0, -1)), std::domain_error);
  CHECK_THROWS_AS(HyperbolicPoint<double>(V(1, 0, 1)), std::domain_error);
  CHECK_THROWS_AS(tangent(V(0, 0, 1), V(0, 0, 1)), std::domain_error);
  CHECK_THROWS_AS(geodesic(tangent(V(0, 0, 1), V(0, 0, 0)), 1.0), std::domain_error);
}

TEST_CASE("geodesic") {
  const auto v = tangent(V(0, 0, 1), V(1, 0, 0));
  CHECK(geodesic(v, 0.0).position().isApprox(V(0, 0, 1)));
  const V g = geodesic(v, 1.0).position();
  CHECK(g(0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(g(2) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));

  const V ode = oracle::geodesic(V(0, 0, 1), V(1, 0, 0), 1.0, 4000);
  CHECK((ode - g).norm() / g.norm() < 1e-8);

  SUBCASE("off-origin, non-unit speed, against the ODE") {
    const V x = boosted_point();
    const V w = tangent_at(x, V(0.3, 1.1, 0.2));
    for (double t : {0.25, 1.0, 1.7}) {
      const V closed = geodesic(tangent(x, w), t).position();
      const V num = oracle::geodesic(x, w, t, 4000);
      CHECK((closed - num).norm() / closed.norm() < 1e-8);
    }
  }
  SUBCASE("distance equals speed times time") {
    const V x = boosted_point();
    const V w = tangent_at(x, V(-0.5, 0.2, 0.9));
    const auto tv = tangent(x, w);
    const double speed = tv.norm();
    CHECK(distance(tv.base(), geodesic(tv, 1.3)) == doctest::Approx(1.3 * speed).epsilon(1e-10));
  }
}

TEST_CASE("geodesic stays on the sheet at long times in extended precision") {
  using L = long double;
  const TangentVector<L> v(HyperbolicPoint<L>::origin(), LorentzVector<L>(0.6L, 0.8L, 0));
  const auto p = geodesic(v, L(10));
  // rounding in <p,p> is of order eps |p|^2 with |p| ~ e^10
  const L scale = p.position().squaredNorm() * std::numeric_limits<L>::epsilon();
  CHECK(std::abs(double(lorentz_inner(p.position(), p.position()) + 1)) < double(16 * scale));
  CHECK(double(distance(HyperbolicPoint<L>::origin(), p)) == doctest::Approx(10).epsilon(1e-12));
}

TEST_CASE("parallel transport") {
  const V x = boosted_point();
  const V v = tangent_at(x, V(0.4, 0.9, 0));
  const V w = tangent_at(x, V(-1.0, 0.5, 0.3));
  const auto tv = tangent(x, v);
  const auto tw = tangent(x, w);

  CHECK(parallel_transport(tv, tw, 0.0).direction().isApprox(w, 1e-14));

  for (double t : {0.5, 1.0, 2.0}) {
    const auto moved = parallel_transport(tv, tw, t);
    const V num = oracle::parallel_transport(x, v, w, t, 4000);
    CHECK((moved.direction() - num).norm() / num.norm() < 1e-8);
    // isometry: norm and angle with the velocity are preserved
    CHECK(moved.norm() == doctest::Approx(tw.norm()).epsilon(1e-10));
    const auto vel = geodesic_velocity(tv, t);
    CHECK(lorentz_inner(moved.direction(), vel.direction()) ==
          doctest::Approx(lorentz_inner(w, v)).epsilon(1e-9));
  }

  SUBCASE("orthogonal vectors keep their coordinates") {
    const auto o = tangent(V(0, 0, 1), V(1, 0, 0));
    const auto n = tangent(V(0, 0, 1), V(0, 1, 0));
    CHECK(parallel_transport(o, n, 1.5).direction().isApprox(V(0, 1, 0), 1e-14));
  }
  SUBCASE("different base points are rejected") {
    CHECK_THROWS_AS(parallel_transport(tangent(V(0, 0, 1), V(1, 0, 0)), tangent(x, w), 1.0),
                    std::domain_error);
  }
}

TEST_CASE("jacobi factor") {
  CHECK(jacobi_factor(-0.7, 0.0) == 1);
  const double h = 1e-6;
  const double deriv = (jacobi_factor(-0.7, h) - jacobi_factor(-0.7, -h)) / (2 * h);
  CHECK(deriv == doctest::Approx(0.7).epsilon(1e-8));
  CHECK(jacobi_factor(-1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(oracle::jacobi_factor(-1.0, 1.0, 4000) == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
  CHECK(oracle::jacobi_factor(-2.5, 1.3, 4000) ==
        doctest::Approx(jacobi_factor(-2.5, 1.3)).epsilon(1e-10));
}

TEST_CASE("equidistant curvature") {
  CHECK(equidistant_curvature(-2.0, 0.0) == -2);
  for (double r : {0.1, 1.0, 5.0}) CHECK(equidistant_curvature(-1.0, r) == doctest::Approx(-1).epsilon(1e-15));
  CHECK(equidistant_curvature(-0.5, 30.0) == doctest::Approx(-1).epsilon(1e-12));
  CHECK_THROWS_AS(equidistant_curvature(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(equidistant_curvature(-0.5, -1.0), std::domain_error);

  const double closed = equidistant_curvature(-2.0, 1.0);
  const auto est = oracle::equidistant_curvature(-2.0, 1.0, 1e-4, 1e-6);
  CHECK(est.conclusive);
  CHECK(std::abs(closed - est.value) < 1e-6);
  // the published six-digit value is a rounding of -1.0944859
  CHECK(std::abs(closed - -1.094487) < 2e-6);
}

TEST_CASE("equidistant point") {
  const auto t = tangent(V(0, 0, 1), V(1, 0, 0));
  CHECK(equidistant_point(t, 0.0).position().isApprox(V(0, 0, 1)));
  const auto p = equidistant_point(t, 0.8);
  CHECK(distance(t.base(), p) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK_THROWS_AS(equidistant_point(tangent(V(0, 0, 1), V(2, 0, 0)), 0.5), std::domain_error);
  // R(t) is a unit quarter turn
  const auto q = rotate_quarter(t);
  CHECK(q.norm() == doctest::Approx(1));
  CHECK(std::abs(lorentz_inner(q.direction(), t.direction())) < 1e-15);
}

TEST_CASE("collar area") {
  const auto c = BoundaryCurve<double>::constant(-1, 1);
  CHECK(collar_area_unit(c, 0.0) == 0);
  CHECK(collar_area_unit(c, 1.0) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
  CHECK(oracle::collar_area(c, 1.0) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-12));
  CHECK_THROWS_AS(collar_area(c, 1.0, 0.5), std::domain_error);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < 20; ++i) {
    const auto curve = oracle::random_curve(100 + i);
    const double r = 0.05 + 2 * U(rng);
    CHECK(collar_area(curve, r, -1.0) == doctest::Approx(collar_area_unit(curve, r)).epsilon(1e-12));
    const double K1 = -(0.2 + 4 * U(rng));
    const double closed = collar_area(curve, r, K1);
    CHECK(std::abs(closed - oracle::collar_area(curve, r, K1)) / closed < 1e-8);
  }
}

TEST_CASE("collar area rescaling coherence") {
  // a curvature-K1 collar is a curvature -1 collar with lengths scaled by sqrt(-K1)
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < 50; ++i) {
    const double kappa = -(0.1 + 3 * U(rng));
    const double len = 0.1 + 3 * U(rng);
    const double r = 0.05 + 2 * U(rng);
    const double K1 = -(0.1 + 5 * U(rng));
    const double s = std::sqrt(-K1);
    const auto curve = BoundaryCurve<double>::constant(kappa, len);
    const double lhs = collar_area(curve, r, K1);
    const double rhs = collar_area_unit(curve.scaled(s), s * r) / (s * s);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("equidistant total curvature") {
  const auto c = BoundaryCurve<double>::constant(-1, 1);
  CHECK(equidistant_total_curvature(c, 0.0) == doctest::Approx(c.total_curvature()));
  CHECK(equidistant_total_curvature(c, 1.0) == doctest::Approx(-std::exp(1.0)).epsilon(1e-14));

  // integral of the pushed curvature against the length factor
  const GaussLegendre gl(10);
  for (int i = 0; i < 5; ++i) {
    const auto curve = oracle::random_curve(300 + i);
    const double r = 0.3 + 0.4 * i;
    const auto& pts = curve.samples();
    double num = 0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
      num += gl.integrate(
          [&](double s) {
            const double k = curve.kappa_at(s);
            return equidistant_curvature(k, r) * jacobi_factor(k, r);
          },
          pts[j - 1].s, pts[j].s);
    }
    CHECK(equidistant_total_curvature(curve, r) == doctest::Approx(num).epsilon(1e-8));
  }
}

TEST_CASE("gauss bonnet residual") {
  const auto c = BoundaryCurve<double>::constant(-1, 1);
  CHECK(oracle::gauss_bonnet_residual(c, 1.0, equidistant_total_curvature(c, 1.0)) < 1e-8);
  CHECK(oracle::gauss_bonnet_residual(c, 0.0, equidistant_total_curvature(c, 0.0)) == 0);
  for (int i = 0; i < 10; ++i) {
    const auto curve = oracle::random_curve(500 + i);
    for (double r : {0.3, 1.0, 2.0}) {
      CHECK(oracle::gauss_bonnet_residual(curve, r, equidistant_total_curvature(curve, r)) < 1e-7);
    }
  }
}

TEST_CASE("boundary curve") {
  CHECK_THROWS(BoundaryCurve<double>({{0, -1}}));
  CHECK_THROWS(BoundaryCurve<double>({{0, -1}, {0, -1}}));
  CHECK_THROWS(BoundaryCurve<double>({{0, -1}, {1, 0.1}}));
  CHECK_THROWS(BoundaryCurve<double>({{0.5, -1}, {1, -1}}));
  const BoundaryCurve<double> c({{0, -1}, {1, -3}});
  CHECK(c.total_curvature() == -2);
  CHECK(c.kappa_at(0.5) == -2);
  const auto s = c.scaled(2);
  CHECK(s.length() == 2);
  CHECK(s.total_curvature() == doctest::Approx(c.total_curvature()));
}
