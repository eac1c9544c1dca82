#include "cmcb/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <json.hpp>

#include "cmcb/estimates.hpp"
#include "cmcb/json_util.hpp"
#include "cmcb/quadrature.hpp"

namespace cmcb::oracle {

using hyperbolic::LorentzVector;
using hyperbolic::lorentz_cross;
using hyperbolic::lorentz_inner;
using hyperbolic::lorentz_norm;

namespace {

template <int N, typename F>
Eigen::Matrix<double, N, 1> rk4(F&& f, Eigen::Matrix<double, N, 1> y, double t, int steps) {
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = f(y);
    const auto k2 = f(y + h / 2 * k1);
    const auto k3 = f(y + h / 2 * k2);
    const auto k4 = f(y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

using Vec9 = Eigen::Matrix<double, 9, 1>;

// Point on the pushed curve at Frenet parameter s.
LorentzVector<double> pushed(double kappa, double r, double s, double step) {
  Vec9 y;
  y << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  if (s != 0) {
    const int steps = std::max(1, int(std::ceil(std::abs(s) / step)));
    auto frenet = [kappa](const Vec9& z) {
      Vec9 dz;
      dz.segment<3>(0) = z.segment<3>(3);
      dz.segment<3>(3) = z.segment<3>(0) + kappa * z.segment<3>(6);
      dz.segment<3>(6) = -kappa * z.segment<3>(3);
      return dz;
    };
    y = rk4<9>(frenet, y, s, steps);
  }
  LorentzVector<double> a = y.segment<3>(0);
  LorentzVector<double> T = y.segment<3>(3);
  a /= std::sqrt(-lorentz_inner(a, a));
  T += lorentz_inner(T, a) * a;
  T /= lorentz_norm(T);
  const hyperbolic::HyperbolicPoint<double> p(a, 1e-10);
  const hyperbolic::TangentVector<double> tangent(p, T, 1e-10);
  return hyperbolic::equidistant_point(tangent, r).position();
}

double curvature_from(const LorentzVector<double>& b0, LorentzVector<double> d1,
                      LorentzVector<double> d2) {
  d1 += lorentz_inner(d1, b0) * b0;
  d2 += lorentz_inner(d2, b0) * b0;
  const double speed2 = lorentz_inner(d1, d1);
  const LorentzVector<double> normal = lorentz_cross(b0, LorentzVector<double>(d1 / std::sqrt(speed2)));
  return lorentz_inner(d2, normal) / speed2;
}

}  // namespace

Estimate equidistant_curvature(double kappa, double r, double step, double tol) {
  if (!(kappa < 0) || !(r > 0) || !(step > 0)) {
    throw std::domain_error("oracle::equidistant_curvature: need kappa < 0, r > 0, step > 0");
  }
  const LorentzVector<double> b0 = pushed(kappa, r, 0, step);

  // scale the difference spacing to the speed of the pushed curve
  const double d0 = 10 * step;
  const double speed =
      lorentz_norm(LorentzVector<double>(pushed(kappa, r, d0, step) - pushed(kappa, r, -d0, step))) /
      (2 * d0);
  const double d = d0 / std::max(1.0, speed);

  std::array<LorentzVector<double>, 3> plus, minus;
  for (int i = 0; i < 3; ++i) {
    const double h = d * double(1 << i);
    plus[i] = pushed(kappa, r, h, step);
    minus[i] = pushed(kappa, r, -h, step);
  }
  auto first = [&](int i) { return LorentzVector<double>((plus[i] - minus[i]) / (2 * d * (1 << i))); };
  auto second = [&](int i) {
    const double h = d * double(1 << i);
    return LorentzVector<double>((plus[i] - 2 * b0 + minus[i]) / (h * h));
  };
  const LorentzVector<double> r1 = (4 * first(0) - first(1)) / 3;
  const LorentzVector<double> r2 = (4 * second(0) - second(1)) / 3;
  const LorentzVector<double> c1 = (4 * first(1) - first(2)) / 3;
  const LorentzVector<double> c2 = (4 * second(1) - second(2)) / 3;

  Estimate out;
  out.value = curvature_from(b0, r1, r2);
  out.error = std::abs(out.value - curvature_from(b0, c1, c2));
  out.conclusive = out.error <= tol;
  return out;
}

double collar_area(const BoundaryCurve<double>& curve, double r, double K1, int quad_n) {
  if (!(K1 < 0)) throw std::domain_error("oracle::collar_area: K1 must be negative");
  if (r == 0) return 0;
  const GaussLegendre gl(quad_n);
  const double rk = std::sqrt(-K1);
  const int t_panels = std::max(1, int(std::ceil(r * 4)));
  const auto& samples = curve.samples();
  double total = 0;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    total += gl.integrate(
        [&](double s) {
          const double kappa = curve.kappa_at(s);
          return gl.integrate(
              [&](double t) { return std::cosh(rk * t) - kappa / rk * std::sinh(rk * t); }, 0, r,
              t_panels);
        },
        samples[i - 1].s, samples[i].s);
  }
  return total;
}

double gauss_bonnet_residual(const BoundaryCurve<double>& curve, double r, double equidistant_total,
                             int quad_n) {
  return std::abs(-collar_area(curve, r, -1, quad_n) + curve.total_curvature() - equidistant_total);
}

double hyperbolic_ball_area(double r, double K1, int quad_n) {
  if (!(K1 < 0)) throw std::domain_error("oracle::hyperbolic_ball_area: K1 must be negative");
  const double rk = std::sqrt(-K1);
  const GaussLegendre gl(quad_n);
  const int panels = std::max(1, int(std::ceil(rk * r * 4)));
  return 2 * kPi / rk * gl.integrate([&](double t) { return std::sinh(rk * t); }, 0, r, panels);
}

using Vec6 = Eigen::Matrix<double, 6, 1>;

LorentzVector<double> geodesic(const LorentzVector<double>& x, const LorentzVector<double>& v,
                               double t, int steps) {
  Vec6 y;
  y << x, v;
  auto f = [](const Vec6& z) {
    Vec6 dz;
    const LorentzVector<double> p = z.head<3>();
    const LorentzVector<double> dp = z.tail<3>();
    dz << dp, lorentz_inner(dp, dp) * p;
    return dz;
  };
  return rk4<6>(f, y, t, steps).head<3>();
}

LorentzVector<double> parallel_transport(const LorentzVector<double>& x,
                                         const LorentzVector<double>& v,
                                         const LorentzVector<double>& w, double t, int steps) {
  Vec9 y;
  y << x, v, w;
  auto f = [](const Vec9& z) {
    Vec9 dz;
    const LorentzVector<double> p = z.segment<3>(0);
    const LorentzVector<double> dp = z.segment<3>(3);
    const LorentzVector<double> W = z.segment<3>(6);
    dz << dp, lorentz_inner(dp, dp) * p, lorentz_inner(W, dp) * p;
    return dz;
  };
  return rk4<9>(f, y, t, steps).segment<3>(6);
}

double jacobi_factor(double kappa, double t, int steps) {
  Eigen::Vector2d y(1, -kappa);
  auto f = [](const Eigen::Vector2d& z) { return Eigen::Vector2d(z(1), z(0)); };
  return rk4<2>(f, y, t, steps)(0);
}

OracleReport compare(std::string id, double closed_form, double oracle, double tolerance,
                     bool relative) {
  OracleReport r;
  r.id = std::move(id);
  r.closed_form = closed_form;
  r.oracle = oracle;
  r.abs_error = std::abs(closed_form - oracle);
  r.rel_error = r.abs_error / std::max(std::abs(oracle), std::numeric_limits<double>::min());
  if (oracle == 0 && closed_form == 0) r.rel_error = 0;
  r.tolerance = tolerance;
  r.relative = relative;
  r.pass = (relative ? r.rel_error : r.abs_error) <= tolerance;
  return r;
}

BoundaryCurve<double> random_curve(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> length(0.2, 3.0), freq(0.5, 4.0), phase(0, 2 * kPi);
  std::uniform_int_distribution<int> count(5, 40);
  const double l = length(rng);
  const double a = freq(rng);
  const double b = phase(rng);
  const int n = count(rng);
  return BoundaryCurve<double>::sampled(
      [&](double s) { return -0.25 - 2.7 * (0.5 + 0.5 * std::sin(a * s + b)); }, l, std::size_t(n));
}

std::vector<OracleReport> run_verification_suite(const SuiteOptions& options) {
  namespace hy = hyperbolic;
  std::vector<OracleReport> out;

  for (int i = 0; i < options.grid; ++i) {
    for (int j = 0; j < options.grid; ++j) {
      const double kappa = -5 + 4.9 * i / std::max(1, options.grid - 1);
      const double r = 0.05 + 2.95 * j / std::max(1, options.grid - 1);
      const Estimate est = equidistant_curvature(kappa, r, options.fd_step);
      OracleReport rep = compare("equidistant_curvature[kappa=" + std::to_string(kappa) +
                                     ",r=" + std::to_string(r) + "]",
                                 hy::equidistant_curvature(kappa, r), est.value, 1e-6, false);
      rep.inconclusive = !est.conclusive;
      rep.pass = rep.pass && est.conclusive;
      out.push_back(rep);
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> radius(0.05, 3.0), curvature(-4.0, -0.25);
  for (int c = 0; c < options.random_curves; ++c) {
    const auto curve = random_curve(rng());
    const double r = radius(rng);
    const std::string tag = "[curve=" + std::to_string(c) + ",r=" + std::to_string(r) + "]";
    out.push_back(compare("collar_area" + tag, hy::collar_area_unit(curve, r),
                          collar_area(curve, r), 1e-8, true));
    const double K1 = curvature(rng);
    out.push_back(compare("collar_area_K1" + tag, hy::collar_area(curve, r, K1),
                          collar_area(curve, r, K1), 1e-8, true));
    out.push_back(compare("gauss_bonnet" + tag, 0,
                          gauss_bonnet_residual(curve, r, hy::equidistant_total_curvature(curve, r)),
                          1e-7, false));
  }
  const auto unit = BoundaryCurve<double>::constant(-1.0, 1.0);
  out.push_back(compare("collar_area[kappa=-1,l=1,r=1]", hy::collar_area(unit, 1.0, -1.0),
                        collar_area(unit, 1.0), 1e-10, false));

  for (auto [r, K1] : {std::pair{1.0, -1.0}, {0.5, -4.0}, {2.0, -1.5}, {0.3, -20.7}}) {
    out.push_back(compare("hyperbolic_ball_area[r=" + std::to_string(r) + ",K1=" +
                              std::to_string(K1) + "]",
                          cmcb::hyperbolic_ball_area(r, K1), hyperbolic_ball_area(r, K1), 1e-10,
                          true));
  }

  const auto origin = hy::HyperbolicPoint<double>::origin();
  const LorentzVector<double> v(1, 0, 0);
  const LorentzVector<double> w(0.3, -0.7, 0);
  for (double t : {0.5, 1.0, 2.0}) {
    const auto closed = hy::geodesic(hy::TangentVector<double>(origin, v), t).position();
    const auto ode = geodesic(origin.position(), v, t);
    out.push_back(compare("geodesic[t=" + std::to_string(t) + "]", 0,
                          (closed - ode).norm() / ode.norm(), 1e-8, false));
    const auto pt = hy::parallel_transport(hy::TangentVector<double>(origin, v),
                                           hy::TangentVector<double>(origin, w), t)
                        .direction();
    const auto pt_ode = parallel_transport(origin.position(), v, w, t);
    out.push_back(compare("parallel_transport[t=" + std::to_string(t) + "]", 0,
                          (pt - pt_ode).norm() / pt_ode.norm(), 1e-8, false));
  }
  for (auto [kappa, t] : {std::pair{-1.0, 1.0}, {-2.5, 0.7}, {-0.3, 2.0}}) {
    out.push_back(compare("jacobi_factor[kappa=" + std::to_string(kappa) + ",t=" +
                              std::to_string(t) + "]",
                          hy::jacobi_factor(kappa, t), jacobi_factor(kappa, t), 1e-8, true));
  }
  return out;
}

std::string to_json(const std::vector<OracleReport>& reports, int indent) {
  using nlohmann::json;
  json cases = json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    cases.push_back({{"id", r.id},
                     {"closed_form", number_to_json(r.closed_form)},
                     {"oracle", number_to_json(r.oracle)},
                     {"abs_error", number_to_json(r.abs_error)},
                     {"rel_error", number_to_json(r.rel_error)},
                     {"tolerance", number_to_json(r.tolerance)},
                     {"tolerance_kind", r.relative ? "relative" : "absolute"},
                     {"inconclusive", r.inconclusive},
                     {"pass", r.pass}});
  }
  json j = {{"cases", cases}, {"total", reports.size()}, {"failed", failed}};
  return j.dump(indent);
}

}  // namespace cmcb::oracle
