#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "cmcb/estimates.hpp"
#include "cmcb/hyperbolic.hpp"
#include "cmcb/oracles.hpp"
#include "cmcb/quadrature.hpp"

using namespace cmcb;
using doctest::Approx;

TEST_CASE("gauss legendre") {
  for (int n = 1; n <= 12; ++n) {
    const GaussLegendre gl(n);
    CHECK(gl.weights().sum() == Approx(2).epsilon(1e-14));
    // exact for polynomials of degree 2n - 1
    const int deg = 2 * n - 1;
    const double got = gl.integrate([&](double x) { return std::pow(x, deg) + std::pow(x, deg - 1); }, 0, 1);
    CHECK(got == Approx(1.0 / (deg + 1) + 1.0 / deg).epsilon(1e-13));
  }
  const GaussLegendre gl(8);
  CHECK(gl.integrate([](double x) { return std::exp(x); }, 0, 3, 6) == Approx(std::exp(3.0) - 1).epsilon(1e-14));
  CHECK_THROWS(GaussLegendre(0));
}

TEST_CASE("equidistant curvature oracle") {
  const auto fixed = oracle::equidistant_curvature(-1, 2);
  CHECK(fixed.conclusive);
  CHECK(std::abs(fixed.value + 1) < 1e-6);
  const auto far = oracle::equidistant_curvature(-0.5, 6);
  CHECK(std::abs(far.value + 1) < 1e-4);
  // a coarse step cannot meet a tight tolerance
  const auto coarse = oracle::equidistant_curvature(-3, 2.5, 0.2, 1e-12);
  CHECK_FALSE(coarse.conclusive);
}

TEST_CASE("collar and ball oracles") {
  const auto c = BoundaryCurve<double>::constant(-1, 1);
  CHECK(oracle::collar_area(c, 0) == 0);
  CHECK(std::abs(oracle::collar_area(c, 1) - (std::exp(1.0) - 1)) < 1e-10);
  CHECK(std::abs(oracle::hyperbolic_ball_area(1, -1) - 2 * kPi * (std::cosh(1.0) - 1)) < 1e-10);
  CHECK(oracle::hyperbolic_ball_area(1e-3, -1) / (kPi * 1e-6) == Approx(1).epsilon(1e-6));
}

TEST_CASE("random curves are reproducible and admissible") {
  const auto a = oracle::random_curve(42);
  const auto b = oracle::random_curve(42);
  REQUIRE(a.samples().size() == b.samples().size());
  for (std::size_t i = 0; i < a.samples().size(); ++i) {
    CHECK(a.samples()[i].kappa == b.samples()[i].kappa);
    CHECK(a.samples()[i].kappa < -0.2);
    CHECK(a.samples()[i].kappa > -3);
  }
}

TEST_CASE("compare") {
  auto r = oracle::compare("x", 1.0, 1.0 + 1e-9, 1e-8, true);
  CHECK(r.pass);
  r = oracle::compare("x", 1.0, 1.1, 1e-8, false);
  CHECK_FALSE(r.pass);
  CHECK(r.abs_error == Approx(0.1));
}

TEST_CASE("full suite passes") {
  oracle::SuiteOptions opt;
  const auto reports = oracle::run_verification_suite(opt);
  CHECK(reports.size() >= 250);
  for (const auto& r : reports) {
    INFO(r.id, " closed=", r.closed_form, " oracle=", r.oracle);
    CHECK(r.pass);
  }
  const auto j = nlohmann::json::parse(oracle::to_json(reports));
  CHECK(j["cases"].size() == reports.size());
  CHECK(j["failed"] == 0);
}
