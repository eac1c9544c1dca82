#pragma once

// Brute-force references for the hyperbolic closed forms: ODE integration and
// quadrature only. Nothing here calls the formula it is used to check, except
// equidistant_point, which builds the pushed curve whose curvature is measured.

#include <cstdint>
#include <string>
#include <vector>

#include "cmcb/boundary_curve.hpp"
#include "cmcb/hyperbolic.hpp"

namespace cmcb::oracle {

struct Estimate {
  double value = 0;
  double error = 0;  ///< truncation error estimate (Richardson difference)
  bool conclusive = true;
};

/// Builds a constant-curvature arc by integrating the Frenet system
/// alpha' = T, T' = alpha + kappa N, N' = -kappa T with RK4 at resolution
/// `step`, pushes it a distance r along R(alpha') and measures the curvature of
/// the result by Richardson-extrapolated central differences.
Estimate equidistant_curvature(double kappa, double r, double step = 1e-4, double tol = 1e-6);

/// Composite Gauss-Legendre integral of the Jacobi factor over [0, l] x [0, r]:
///   int int cosh(sqrt(k) t) - kappa(s) / sqrt(k) sinh(sqrt(k) t) dt ds,  k = -K1,
/// one panel per sample interval in s, panels of width <= 1/4 in t.
double collar_area(const BoundaryCurve<double>& curve, double r, double K1 = -1, int quad_n = 8);

/// |-collar area (quadrature) + int kappa - total curvature of the equidistant arc|
double gauss_bonnet_residual(const BoundaryCurve<double>& curve, double r, double equidistant_total,
                             int quad_n = 8);

/// (2 pi / sqrt(-K1)) int_0^r sinh(sqrt(-K1) t) dt by composite Gauss-Legendre.
double hyperbolic_ball_area(double r, double K1, int quad_n = 8);

/// RK4 solution of the geodesic equation gamma'' = <gamma', gamma'>_L gamma.
hyperbolic::LorentzVector<double> geodesic(const hyperbolic::LorentzVector<double>& x,
                                           const hyperbolic::LorentzVector<double>& v, double t,
                                           int steps = 2000);

/// RK4 solution of W' = <W, gamma'>_L gamma along the geodesic (parallel field).
hyperbolic::LorentzVector<double> parallel_transport(const hyperbolic::LorentzVector<double>& x,
                                                     const hyperbolic::LorentzVector<double>& v,
                                                     const hyperbolic::LorentzVector<double>& w,
                                                     double t, int steps = 2000);

/// RK4 solution of f'' = f, f(0) = 1, f'(0) = -kappa.
double jacobi_factor(double kappa, double t, int steps = 2000);

struct OracleReport {
  std::string id;
  double closed_form = 0;
  double oracle = 0;
  double abs_error = 0;
  double rel_error = 0;
  double tolerance = 0;
  bool relative = false;  ///< tolerance applies to rel_error
  bool inconclusive = false;
  bool pass = false;
};

OracleReport compare(std::string id, double closed_form, double oracle, double tolerance,
                     bool relative);

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  int grid = 10;          ///< equidistant curvature grid is grid x grid
  int random_curves = 50;
  double fd_step = 1e-4;
};

/// Full suite: equidistant-curvature grid, random-curve collar areas and
/// Gauss-Bonnet residuals, ball areas, geodesic / transport / Jacobi ODEs.
std::vector<OracleReport> run_verification_suite(const SuiteOptions& options = {});

/// Random sampled curve with smooth kappa in (-3, -0.2).
BoundaryCurve<double> random_curve(std::uint64_t seed);

std::string to_json(const std::vector<OracleReport>& reports, int indent = 2);

}  // namespace cmcb::oracle
