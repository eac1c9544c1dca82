#include "cmcb/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cmcb/parse.hpp"

namespace cmcb {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// Ball bound of the hyperbolic comparison at an explicit scale.
double stable_ball(double K1, double lam, double r) {
  return 2 * kPi / (-K1 * lam * lam) * (std::cosh(lam * std::sqrt(-K1) * r) - 1);
}

// Bracket shared by the two concentrated-mode ball bounds:
// 2 [cosh(lambda sqrt(A3) r) - 1] + sinh(lambda sqrt(A3) r) / sqrt(A3)
double concentrated_bracket(double A3, double lam, double r) {
  const double x = lam * std::sqrt(A3) * r;
  return 2 * (std::cosh(x) - 1) + std::sinh(x) / std::sqrt(A3);
}

double annulus_complement(const GeometryParams& p, double lam, double r) {
  const double A3 = a3(p);
  return 2 * (6 * kPi + 1) / (lam * lam * A3) * double(p.I) * concentrated_bracket(A3, lam, r);
}

double concentrated_ball(const GeometryParams& p, double lam, double r) {
  return annulus_complement(p, lam, r) + 3 * kPi / 8 * double(p.I) / (lam * lam);
}

void require_regions(const GeometryParams& p, const char* who) {
  if (p.I < 1) {
    throw PreconditionError(std::string(who) + ": requires I >= 1 (concentration regions exist)");
  }
}

}  // namespace

void GeometryParams::validate() const {
  require(I >= 0, "I must be a nonnegative integer");
  require(std::isfinite(r0) && r0 > 0, "r0 must be positive");
  require(std::isfinite(K0) && K0 >= 0, "K0 must be nonnegative");
  require(std::isfinite(H0) && H0 >= 0, "H0 must be nonnegative");
  require(std::isfinite(Cs) && Cs >= 2 * kPi, "Cs must be at least 2 pi");
  require(std::isfinite(A1) && A1 >= 1, "A1 must be at least 1");
  if (c) require(std::isfinite(*c) && *c > 0, "c must be positive");
}

double lambda(const GeometryParams& params) {
  return std::max({1.0, 1 / params.r0, std::sqrt(params.K0), params.H0});
}

double c_A() {
  return kPi * (kPi / 4) * (kPi / 4) * std::exp(-kPi / 2 - 1 + kPi / 4);
}

double ball_area_lower(double r) {
  if (!(r > 0 && r <= kPi / 4)) {
    throw std::domain_error("ball_area_lower: r must lie in (0, pi/4]");
  }
  return kPi * r * r * std::exp(-2 * r - 1 + r / std::tan(r));
}

double k1(const GeometryParams& params, CurvatureMode mode) {
  const double a = mode == CurvatureMode::stable ? params.Cs : params.A1;
  return -1 - a * a / 2;
}

double c_hat_s(const GeometryParams& params) { return 1 + 2 * params.Cs; }

C1Parts c1_parts(const GeometryParams& params) {
  const double absK1 = -k1(params, CurvatureMode::concentrated);
  C1Parts parts;
  parts.c3 = std::min(2 * kPi / (3 * absK1), c_A() / 2);
  parts.c1 = parts.c3;
  if (params.I >= 1) {
    parts.c4_prime = kPi / absK1;
    parts.c4_double_prime = c_A() / double(12 * params.I - 3);
    parts.c4 = std::min(*parts.c4_prime, *parts.c4_double_prime);
    parts.c1 = std::min(parts.c3, *parts.c4);
  }
  return parts;
}

double c1(const GeometryParams& params) { return c1_parts(params).c1; }

double area_lower_bound(const GeometryParams& params, long long genus) {
  const double lam = lambda(params);
  return c1(params) * double(genus + 1) / (lam * lam);
}

double high_genus_constant(const GeometryParams& params) {
  const double cs = params.Cs;
  return kPi / (3 + 4 * cs + 4 * cs * cs);
}

double area_lower_bound_high_genus(const GeometryParams& params, long long genus) {
  const long long threshold = g_threshold(params);
  if (genus < threshold) {
    throw PreconditionError("area_lower_bound_high_genus: genus " + std::to_string(genus) +
                            " is below the threshold G(I) = " + std::to_string(threshold));
  }
  const double lam = lambda(params);
  return high_genus_constant(params) * double(genus + 1) / (lam * lam);
}

double unit_balls_area_bound(const GeometryParams& params) {
  if (params.I < 1) return 0;
  return double(params.I) * concentrated_ball(params, 1, 1);
}

long long g_threshold(const GeometryParams& params) {
  if (params.I == 0) return 0;
  const double K1 = k1(params, CurvatureMode::concentrated);
  const double ratio = -2 * K1 * unit_balls_area_bound(params) / kPi;
  return std::max(12 * params.I - 3, static_cast<long long>(std::ceil(ratio)) - 1);
}

double hyperbolic_ball_area(double r, double K1) {
  if (!(K1 < 0)) throw std::domain_error("hyperbolic_ball_area: K1 must be negative");
  if (!(r >= 0)) throw std::domain_error("hyperbolic_ball_area: r must be nonnegative");
  return stable_ball(K1, 1, r);
}

double ball_area_upper_stable(const GeometryParams& params, double r, CurvatureMode mode) {
  if (!(r >= 0)) throw std::domain_error("ball_area_upper_stable: r must be nonnegative");
  return stable_ball(k1(params, mode), lambda(params), r);
}

double a3(const GeometryParams& params) { return -4 * k1(params, CurvatureMode::concentrated); }

double annulus_complement_area_upper(const GeometryParams& params, double r) {
  require_regions(params, "annulus_complement_area_upper");
  if (!(r >= 0)) throw std::domain_error("annulus_complement_area_upper: r must be nonnegative");
  return annulus_complement(params, lambda(params), r);
}

double ball_area_upper_concentrated(const GeometryParams& params, double r) {
  require_regions(params, "ball_area_upper_concentrated");
  if (!(r >= 0)) throw std::domain_error("ball_area_upper_concentrated: r must be nonnegative");
  return concentrated_ball(params, lambda(params), r);
}

double h_tilde(const GeometryParams& params, double r) {
  if (params.I == 0) return stable_ball(k1(params, CurvatureMode::stable), 1, r);
  return std::max(stable_ball(k1(params, CurvatureMode::concentrated), 1, r),
                  concentrated_ball(params, 1, r));
}

double diameter_lower_bound(const GeometryParams& params, long long genus, DiameterMode mode) {
  const double lam = lambda(params);
  const double C1 = c1(params);
  const double g1 = double(genus + 1);
  if (mode == DiameterMode::concentrated) {
    require_regions(params, "diameter_lower_bound");
    const double arg = C1 * g1 / (20 * double(params.I));
    if (arg < 1) return 0;
    return std::acosh(arg) / (lam * std::sqrt(a3(params)));
  }
  const double K1 = k1(params, mode == DiameterMode::stable ? CurvatureMode::stable
                                                          : CurvatureMode::concentrated);
  const double arg = -K1 * C1 * g1 / (2 * kPi) + 1;
  return std::acosh(arg) / (lam * std::sqrt(-K1));
}

double stability_radius(double c) {
  if (!(c > 0)) throw std::domain_error("stability_radius: c must be positive");
  return 2 * kPi / std::sqrt(3 * c);
}

CompactBounds compact_case_bounds(const GeometryParams& params) {
  if (!params.c) throw PreconditionError("compact_case_bounds: requires the constant c");
  const double lam = lambda(params);
  CompactBounds out;
  out.r_c = stability_radius(*params.c);
  const double radius = 2 * double(params.I + 1) * out.r_c;
  out.a2 = h_tilde(params, radius);
  out.area_upper = out.a2 / (lam * lam);
  out.diameter_upper = radius / lam;
  out.genus_upper_real = out.a2 / c1(params) - 1;
  constexpr double kMax = double(std::numeric_limits<long long>::max() / 2);
  out.genus_upper = out.genus_upper_real >= kMax
                        ? std::numeric_limits<long long>::max()
                        : static_cast<long long>(std::floor(out.genus_upper_real));
  return out;
}

void SurfaceSummary::validate() const {
  require(genus >= 0, "genus must be nonnegative");
  require(index >= 0, "index must be nonnegative");
  require(std::isfinite(H) && H >= 0, "H must be nonnegative");
  if (compact) {
    require(std::isfinite(area) && area > 0, "area of a compact surface must be positive");
    require(std::isfinite(diameter) && diameter > 0,
            "diameter of a compact surface must be positive");
  } else {
    require(area > 0 && diameter > 0, "area and diameter must be positive");
  }
  if (extrinsic_diameter) {
    require(*extrinsic_diameter > 0, "extrinsic diameter must be positive");
  }
}

SurfaceSummary rescale_summary(const SurfaceSummary& summary, double lam) {
  if (!(lam >= 1)) throw std::domain_error("rescale_summary: lambda must be >= 1");
  SurfaceSummary out = summary;
  out.area *= lam * lam;
  out.diameter *= lam;
  if (out.extrinsic_diameter) *out.extrinsic_diameter *= lam;
  out.H /= lam;
  return out;
}

GeometryParams rescale_params(const GeometryParams& params, double lam) {
  if (!(lam >= 1)) throw std::domain_error("rescale_params: lambda must be >= 1");
  GeometryParams out = params;
  out.r0 *= lam;
  out.K0 /= lam * lam;
  out.H0 /= lam;
  return out;
}

}  // namespace cmcb
