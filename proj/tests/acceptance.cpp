// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmcb/config.hpp"
#include "cmcb/estimates.hpp"
#include "cmcb/hyperbolic.hpp"
#include "cmcb/mesh.hpp"
#include "cmcb/oracles.hpp"
#include "cmcb/report.hpp"
#include "cmcb/structure.hpp"

using namespace cmcb;

namespace {

std::string data(const std::string& name) { return std::string(CMCB_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Outcome constants() {
  Outcome o;
  const double ca = c_A();
  const double e = ball_area_lower(kPi / 4);
  o.require(std::abs(ca - 0.325043) <= 1e-6, "C_A vs 0.325043");
  o.require(std::abs(e - ca) <= 1e-12, "E(pi/4) vs C_A");
  o.detail << std::setprecision(10) << "C_A=" << ca << " |E(pi/4)-C_A|=" << std::abs(e - ca);
  return o;
}

Outcome kernel_vs_oracles() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  oracle::SuiteOptions opt;
  opt.grid = 10;
  opt.random_curves = 50;
  const auto reports = oracle::run_verification_suite(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int curvature = 0, collar = 0, gb = 0, failed = 0;
  double worst_curv = 0, worst_collar = 0, worst_gb = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    if (r.id.rfind("equidistant_curvature", 0) == 0) {
      ++curvature;
      worst_curv = std::max(worst_curv, r.abs_error);
      o.require(r.abs_error <= 1e-6 && !r.inconclusive, r.id);
    } else if (r.id.rfind("collar_area", 0) == 0) {
      ++collar;
      worst_collar = std::max(worst_collar, r.rel_error);
      o.require(r.rel_error <= 1e-8, r.id);
    } else if (r.id.rfind("gauss_bonnet", 0) == 0) {
      ++gb;
      worst_gb = std::max(worst_gb, r.abs_error);
      o.require(r.abs_error < 1e-7, r.id);
    }
  }
  o.require(curvature >= 100, "100-case curvature grid");
  o.require(collar >= 50, "50 random curves");
  o.require(failed == 0, "every oracle case passes");
  o.require(secs < 60, "runtime under 60 s");
  o.detail << std::setprecision(3) << curvature << " curvature cases (max err " << worst_curv << "), "
           << collar << " collar cases (max rel " << worst_collar << "), " << gb
           << " Gauss-Bonnet cases (max " << worst_gb << "), " << secs << " s";
  return o;
}

Outcome specialization() {
  Outcome o;
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(0, 1);
  double worst_unit = 0, worst_scale = 0;
  for (int i = 0; i < 200; ++i) {
    const auto curve = oracle::random_curve(1000 + i);
    const double r = 3 * U(rng);
    const double a = hyperbolic::collar_area(curve, r, -1.0);
    const double b = hyperbolic::collar_area_unit(curve, r);
    worst_unit = std::max(worst_unit, std::abs(a - b) / std::max(1.0, std::abs(b)));

    const double kappa = -(0.05 + 4 * U(rng));
    const double len = 0.05 + 4 * U(rng);
    const double rr = 0.05 + 2 * U(rng);
    const double K1 = -(0.05 + 6 * U(rng));
    const double s = std::sqrt(-K1);
    const auto c = BoundaryCurve<double>::constant(kappa, len);
    const double lhs = hyperbolic::collar_area(c, rr, K1);
    const double rhs = hyperbolic::collar_area_unit(c.scaled(s), s * rr) / (s * s);
    worst_scale = std::max(worst_scale, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  o.require(worst_unit <= 1e-12, "K1 = -1 specialization");
  o.require(worst_scale <= 1e-10, "rescaling coherence");
  o.detail << std::setprecision(3) << "max specialization err " << worst_unit
           << ", max rescaling err " << worst_scale << " over 200 draws";
  return o;
}

Outcome gauss_bonnet() {
  Outcome o;
  for (const auto& [file, chi] : std::vector<std::pair<std::string, int>>{
           {"unit_sphere.off", 2}, {"torus.off", 0}, {"genus2.off", -2}}) {
    const auto m = mesh::read_mesh(data(file));
    const auto e = mesh::euler_genus(m);
    const double defect = mesh::angle_defect_total(m);
    const double err = std::abs(defect - 2 * kPi * chi);
    o.require(e.chi == chi, file + " chi");
    o.require(err <= 1e-9, file + " defect");
    o.detail << file << " chi=" << e.chi << " err=" << std::setprecision(2) << err << "; ";
  }
  return o;
}

Outcome jacobi_index() {
  Outcome o;
  for (int level : {3, 4}) {
    const auto s = mesh::jacobi_spectrum(mesh::icosphere(level), mesh::Boundary::closed);
    const double rel = std::abs(s.eigenvalues(0) + 2) / 2;
    o.require(s.index == 1, "sphere level " + std::to_string(level) + " index");
    o.require(s.nullity == 3, "sphere level " + std::to_string(level) + " nullity");
    o.require(rel <= 0.02, "sphere level " + std::to_string(level) + " lowest eigenvalue");
    o.detail << "sphere L" << level << ": index " << s.index << " nullity " << s.nullity
             << " mu0 " << std::setprecision(6) << s.eigenvalues(0) << "; ";
  }
  const auto disk = mesh::flat_disk(1, 8);
  const auto d = mesh::jacobi_spectrum(disk, mesh::Boundary::dirichlet);
  o.require(d.index == 0, "Dirichlet disk index");
  o.detail << "disk: index " << d.index << " mu0 " << d.eigenvalues(0);
  return o;
}

Outcome sphere_pipeline() {
  Outcome o;
  const auto ms = mesh::summarize(mesh::read_mesh(data("unit_sphere.off")));
  GeometryParams p;
  p.I = 1;
  const auto report = check_surface(ms.summary, p);
  o.require(lambda(p) == 1, "lambda = 1");
  o.require(ms.summary.genus == 0 && ms.summary.index == 1, "g = 0, index 1");
  o.require(std::abs(ms.summary.area - 4 * kPi) / (4 * kPi) < 0.01, "area near 4 pi");
  o.require(std::abs(ms.summary.H - 1) < 0.01, "|H| near 1");
  for (const char* key : {"area_lower_universal", "extrinsic_diameter_lower", "area_lower_genus"}) {
    o.require(report.inequality(key)->verdict == Verdict::satisfied, key);
  }
  o.require(!report.any_violated(), "zero violations");
  o.detail << std::setprecision(6) << "area " << ms.summary.area << " >= C1 = " << c1(p)
           << ", extrinsic diameter " << *ms.summary.extrinsic_diameter << " > pi/4, violations "
           << (report.any_violated() ? "present" : "none");
  return o;
}

// Surface and params in the normalized space, mapped into an ambient metric
// with the given lambda (lengths divided by lambda).
std::pair<SurfaceSummary, GeometryParams> denormalize(SurfaceSummary s, GeometryParams p, double lam) {
  s.area /= lam * lam;
  s.diameter /= lam;
  if (s.extrinsic_diameter) *s.extrinsic_diameter /= lam;
  s.H *= lam;
  p.r0 /= lam;
  p.K0 *= lam * lam;
  p.H0 *= lam;
  return {s, p};
}

Outcome scaling_covariance() {
  Outcome o;
  std::vector<std::pair<SurfaceSummary, GeometryParams>> cases;
  SurfaceSummary sphere;
  sphere.area = 4 * kPi;
  sphere.diameter = kPi;
  sphere.extrinsic_diameter = 2;
  sphere.H = 1;
  sphere.index = 1;
  GeometryParams p1;
  p1.I = 1;
  cases.push_back({sphere, p1});
  SurfaceSummary tiny = sphere;
  tiny.area = 0.01;
  tiny.extrinsic_diameter = 0.5;
  cases.push_back({tiny, p1});
  SurfaceSummary big = sphere;
  big.genus = 100;
  big.area = 40;
  big.diameter = 12;
  big.H = 0.3;
  GeometryParams p3;
  p3.I = 3;
  p3.c = 2;
  cases.push_back({big, p3});
  SurfaceSummary open = sphere;
  open.compact = false;
  open.area = open.diameter = std::numeric_limits<double>::infinity();
  open.extrinsic_diameter.reset();
  cases.push_back({open, p3});

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> U(1, 10);
  int compared = 0;
  for (int i = 0; i < 20; ++i) {
    const double lam = U(rng);
    for (const auto& [s, p] : cases) {
      const auto base = check_surface(s, p);
      const auto [s2, p2] = denormalize(s, p, lam);
      if (std::abs(lambda(p2) - lam) > 1e-12 * lam) o.require(false, "lambda of scaled params");
      const auto scaled = check_surface(s2, p2);
      if (base.inequalities.size() != scaled.inequalities.size()) {
        o.require(false, "inequality count");
        continue;
      }
      for (std::size_t k = 0; k < base.inequalities.size(); ++k) {
        ++compared;
        if (base.inequalities[k].verdict != scaled.inequalities[k].verdict) {
          o.require(false, base.inequalities[k].key + " at lambda " + std::to_string(lam));
        }
      }
    }
  }
  o.detail << compared << " verdicts compared over 20 lambda draws in [1, 10]";
  return o;
}

Outcome structure_validator() {
  Outcome o;
  const Config cfg = load_config(data("structure_regions.yaml"));
  const StructureData base = *cfg.structure;
  const GeometryParams p = cfg.params;
  const auto rep = validate_structure(base, p);
  for (const char* key : {"index_one_type", "euler_characteristic", "boundary_curvature",
                          "region_total_curvature", "euler_characteristic_union",
                          "concentrated_total_curvature", "area_chain", "genus_drop"}) {
    bool seen = false;
    for (const auto& c : rep.checks) {
      if (c.key != key) continue;
      seen = true;
      o.require(c.verdict == Verdict::satisfied, std::string("valid example: ") + key);
    }
    o.require(seen, std::string("valid example checks ") + key);
  }
  o.require(!rep.any_violated(), "valid example passes");

  struct Mutation {
    std::string name;
    std::string expected;
    std::function<void(StructureData&)> apply;
  };
  const std::vector<Mutation> mutations = {
      {"B(a)", "index_one_type", [](StructureData& d) { d.regions[0].genus = 1; d.regions[0].e = 1; }},
      {"B(b)", "orientable_higher_index",
       [](StructureData& d) { d.regions[0].index = 2; d.regions[0].genus = 3; d.regions[0].e = 1; }},
      {"B(c)", "nonorientable",
       [](StructureData& d) {
         d.regions[0].index = 2;
         d.regions[0].orientable = false;
         d.regions[0].genus = 5;
         d.regions[0].e = 1;
       }},
      {"B(d)", "euler_characteristic",
       [](StructureData& d) {
         d.regions[0].index = 2;
         d.regions[0].genus = 2;
         d.regions[0].m = 4;
         d.regions[0].kappa = 8 * kPi + 0.02;
       }},
      {"B(e)", "boundary_curvature", [](StructureData& d) { d.regions[1].kappa = 6 * kPi + 0.13; }},
      {"B(f)", "region_total_curvature",
       [](StructureData& d) { d.regions[0].index = 2; d.regions[0].e = 1; }},
      {"C", "genus_drop", [](StructureData& d) { d.genus_M = 12; d.genus_Mtilde = 0; }},
      {"D", "area_chain", [](StructureData& d) { d.area_concentrated = 1.5; }},
  };
  int flagged = 0;
  for (const auto& m : mutations) {
    StructureData d = base;
    m.apply(d);
    const auto keys = validate_structure(d, p).violated_keys();
    const bool exact = keys.size() == 1 && keys[0] == m.expected;
    if (exact) ++flagged;
    std::string got;
    for (const auto& k : keys) got += (got.empty() ? "" : ",") + k;
    o.require(exact, m.name + " flagged " + (got.empty() ? "nothing" : got));
  }
  o.detail << "valid example clean, " << flagged << " of " << mutations.size()
           << " mutations flagged with exactly the broken inequality";
  return o;
}

Outcome monotonicity() {
  Outcome o;
  int pairs = 0;
  for (long long I = 0; I < 20; ++I) {
    double prev_a2 = std::numeric_limits<double>::infinity();
    double prev_rc = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 20; ++j) {
      GeometryParams p;
      p.I = I;
      p.c = 0.1 * std::pow(1.5, j);
      const auto cb = compact_case_bounds(p);
      if (j > 0) {
        ++pairs;
        if (!(cb.a2 <= prev_a2)) o.require(false, "A2 at I=" + std::to_string(I));
        if (!(cb.r_c < prev_rc)) o.require(false, "R_c at I=" + std::to_string(I));
      }
      prev_a2 = cb.a2;
      prev_rc = cb.r_c;
    }
  }
  GeometryParams p0;
  o.require(g_threshold(p0) == 0, "G(0) = 0");
  for (double A1 : {1.0, 2.0, 5.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (long long I = 0; I <= 50; ++I) {
      GeometryParams p;
      p.I = I;
      p.A1 = A1;
      if (!(c1(p) <= prev)) o.require(false, "C1 at I=" + std::to_string(I));
      prev = c1(p);
    }
  }
  o.detail << pairs << " adjacent (I, c) pairs, G(0) = " << g_threshold(p0)
           << ", C1 over I = 0..50 at three A1";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"constant reproduction", constants},
      {"hyperbolic kernel vs oracles", kernel_vs_oracles},
      {"specialization identities", specialization},
      {"discrete Gauss-Bonnet", gauss_bonnet},
      {"Jacobi index", jacobi_index},
      {"bounds on the sphere mesh", sphere_pipeline},
      {"scaling covariance", scaling_covariance},
      {"structure validator", structure_validator},
      {"monotonicity", monotonicity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
