#pragma once

// Area, diameter and genus estimates for complete constant mean curvature
// surfaces of bounded index in 3-manifolds with bounded geometry.
//
// Every bound is evaluated in the normalized space (injectivity radius >= 1,
// |sectional curvature| <= 1, H <= 1) and converted back with
// lambda = max{1, 1/r0, sqrt(K0), H0}: areas scale by 1/lambda^2, lengths by
// 1/lambda.

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace cmcb {

inline constexpr double kPi = std::numbers::pi;
/// Graph-function slope constant fixed for the multi-graph annuli.
inline constexpr double kTau = kPi / 10;

/// A documented precondition of a bound does not hold (e.g. genus below the
/// high-genus threshold).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Ambient and surface constants feeding every estimate. Defaults are the
/// normalized space with the smallest admissible structure constants.
struct GeometryParams {
  long long I = 0;          ///< index bound
  double r0 = 1;            ///< injectivity radius lower bound
  double K0 = 1;            ///< |sectional curvature| upper bound
  double H0 = 1;            ///< mean curvature upper bound
  double Cs = 2 * kPi;      ///< curvature estimate for stable surfaces, >= 2 pi
  double A1 = 1;            ///< curvature threshold outside concentration regions, >= 1
  std::optional<double> c;  ///< 3H^2 + rho/2 >= c > 0, normalized-space value

  /// Throws InputError naming the first violated constraint.
  void validate() const;
};

/// Which lower curvature bound drives the hyperbolic comparison.
enum class CurvatureMode {
  stable,        ///< I = 0: K1 = -1 - Cs^2 / 2
  concentrated,  ///< structure threshold: K1 = -1 - A1^2 / 2
};

/// Which diameter lower bound to evaluate.
enum class DiameterMode {
  stable,        ///< I = 0, hyperbolic comparison with stable K1
  no_regions,    ///< I >= 1 and no concentration regions, concentrated K1
  concentrated,  ///< I >= 1 with concentration regions
};

double lambda(const GeometryParams& params);

/// pi (pi/4)^2 exp(-pi/2 - 1 + pi/4) ~ 0.325043
double c_A();

/// E(r) = pi r^2 exp(-2r - 1 + r cot r), r in (0, pi/4].
double ball_area_lower(double r);

double k1(const GeometryParams& params, CurvatureMode mode);

/// 1 + 2 Cs
double c_hat_s(const GeometryParams& params);

/// The pieces of C1(I). c4 and its two candidates exist only for I >= 1.
struct C1Parts {
  double c3 = 0;
  std::optional<double> c4_prime;
  std::optional<double> c4_double_prime;
  std::optional<double> c4;
  double c1 = 0;
};

C1Parts c1_parts(const GeometryParams& params);
double c1(const GeometryParams& params);

/// C1(I) (g + 1) / lambda^2
double area_lower_bound(const GeometryParams& params, long long genus);

/// pi / (3 + 4 Cs + 4 Cs^2)
double high_genus_constant(const GeometryParams& params);

/// C (g + 1) / lambda^2; requires g >= G(I).
double area_lower_bound_high_genus(const GeometryParams& params, long long genus);

/// Area bound for the at most I unit balls of large curvature:
/// I times the concentrated ball bound at r = 1, lambda = 1. Zero for I = 0.
double unit_balls_area_bound(const GeometryParams& params);

/// G(I) = max{12I - 3, ceil(-2 K1 h(I) / pi) - 1}, G(0) = 0.
long long g_threshold(const GeometryParams& params);

/// Area of the radius-r disk in the plane of curvature K1 < 0:
/// 2 pi / (-K1) [cosh(sqrt(-K1) r) - 1].
double hyperbolic_ball_area(double r, double K1);

/// 2 pi / (-K1 lambda^2) [cosh(lambda sqrt(-K1) r) - 1]
double ball_area_upper_stable(const GeometryParams& params, double r, CurvatureMode mode);

/// A3(I) = -4 K1(I) >= 6, concentrated K1.
double a3(const GeometryParams& params);

/// Area of a ball minus the concentration regions; requires I >= 1.
double annulus_complement_area_upper(const GeometryParams& params, double r);

/// The same plus 3 pi I / (8 lambda^2); requires I >= 1.
double ball_area_upper_concentrated(const GeometryParams& params, double r);

/// h~(I, r): the larger of the applicable ball bounds in the normalized space
/// (stable bound alone for I = 0).
double h_tilde(const GeometryParams& params, double r);

/// Diameter lower bound in terms of genus; 0 where the bound is vacuous.
double diameter_lower_bound(const GeometryParams& params, long long genus, DiameterMode mode);

/// R_c = 2 pi / sqrt(3c)
double stability_radius(double c);

struct CompactBounds {
  double r_c = 0;
  double a2 = 0;              ///< A2(I, c) = h~(I, 2 (I + 1) R_c)
  double area_upper = 0;      ///< A2 / lambda^2
  double diameter_upper = 0;  ///< 2 (I + 1) R_c / lambda
  double genus_upper_real = 0;  ///< A2 / C1 - 1
  long long genus_upper = 0;    ///< floor of the above
};

/// Requires params.c.
CompactBounds compact_case_bounds(const GeometryParams& params);

/// Observed data about a surface, in the ambient metric of the params it is
/// checked against.
struct SurfaceSummary {
  long long genus = 0;  ///< genus of the orientable cover
  double area = 0;
  double diameter = 0;  ///< intrinsic
  std::optional<double> extrinsic_diameter;
  double H = 0;
  long long index = 0;
  bool compact = true;
  bool connected = true;

  void validate() const;
};

/// Normalizes a summary by lambda: area * lambda^2, lengths * lambda, H / lambda.
SurfaceSummary rescale_summary(const SurfaceSummary& summary, double lam);

/// Params of the normalized ambient metric: r0 * lam, K0 / lam^2, H0 / lam.
GeometryParams rescale_params(const GeometryParams& params, double lam);

}  // namespace cmcb
