#include "cmcb/structure.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cmcb/json_util.hpp"
#include "cmcb/parse.hpp"

namespace cmcb {

long long Region::euler_characteristic() const {
  return orientable ? 2 - 2 * genus - e : 1 - genus - e;
}

long long StructureData::e() const {
  long long sum = 0;
  for (const auto& r : regions) sum += r.e;
  return sum;
}

long long StructureData::S() const {
  long long sum = 0;
  for (const auto& r : regions) sum += r.m;
  return sum;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::string region_name(std::size_t i) { return "region " + std::to_string(i + 1); }

}  // namespace

void StructureData::validate(const GeometryParams& params) const {
  params.validate();
  require(std::isfinite(delta) && std::isfinite(delta1) && delta1 > 0,
          "delta1 must be positive");
  require(delta1 <= delta / 2, "delta1 must be at most delta/2");
  require(delta / 2 <= 0.25, "delta must be at most 1/2");
  require(k() <= std::size_t(params.I), "number of regions k exceeds I");
  long long index_sum = 0;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const Region& r = regions[i];
    const std::string name = region_name(i);
    require(r.e >= 1, name + ": e must be at least 1");
    require(r.m >= 2, name + ": m must be at least 2");
    require(r.index >= 1, name + ": index must be at least 1");
    require(r.genus >= 0, name + ": genus must be nonnegative");
    require(std::isfinite(r.kappa), name + ": kappa must be finite");
    require(std::isfinite(r.r_F) && r.r_F >= delta1 && r.r_F <= delta / 2,
            name + ": r_F must lie in [delta1, delta/2]");
    if (i > 0) {
      require(regions[i - 1].r_F > 4 * r.r_F,
              name + ": r_F must be less than a quarter of the previous r_F");
    }
    if (r.boundary_length) {
      require(std::isfinite(*r.boundary_length) && *r.boundary_length > 0,
              name + ": boundary_length must be positive");
    }
    index_sum += r.index;
  }
  require(index_sum <= params.I, "sum of region indices exceeds I");
  if (genus_M) require(*genus_M >= 0, "genus_M must be nonnegative");
  if (genus_Mtilde) require(*genus_Mtilde >= 0, "genus_Mtilde must be nonnegative");
  if (area_Mtilde) require(std::isfinite(*area_Mtilde) && *area_Mtilde > 0, "area_Mtilde must be positive");
  if (area_concentrated) {
    require(std::isfinite(*area_concentrated) && *area_concentrated > 0,
            "area_concentrated must be positive");
  }
}

bool StructureReport::any_violated() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const StructureCheck& c) { return c.verdict == Verdict::violated; });
}

std::vector<std::string> StructureReport::violated_keys() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::violated && std::find(out.begin(), out.end(), c.key) == out.end()) {
      out.push_back(c.key);
    }
  }
  return out;
}

namespace {

struct Builder {
  std::vector<StructureCheck>& out;

  // Records a conjunction of `lhs <= rhs` (or `<` when strict) conditions;
  // slack is the smallest margin.
  void add(std::string key, std::optional<std::size_t> region, std::string formula,
           std::initializer_list<std::pair<double, double>> conds, bool strict = false,
           std::string detail = {}) {
    StructureCheck c;
    c.key = std::move(key);
    c.region = region;
    c.formula = std::move(formula);
    c.detail = std::move(detail);
    c.slack = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const auto& [lhs, rhs] : conds) {
      const double margin = rhs - lhs;
      c.slack = std::min(c.slack, margin);
      ok = ok && (strict ? margin > 0 : margin >= 0);
    }
    c.verdict = ok ? Verdict::satisfied : Verdict::violated;
    out.push_back(std::move(c));
  }

  void skip(std::string key, std::string formula, std::string detail) {
    StructureCheck c;
    c.key = std::move(key);
    c.verdict = Verdict::not_applicable;
    c.formula = std::move(formula);
    c.detail = std::move(detail);
    out.push_back(std::move(c));
  }
};

double as_d(long long v) { return double(v); }

}  // namespace

StructureReport validate_structure(const StructureData& data, const GeometryParams& params) {
  data.validate(params);
  StructureReport report;
  report.k = data.k();
  report.e = data.e();
  report.S = data.S();
  Builder b{report.checks};

  const double I = as_d(params.I);
  const double k = double(data.k());
  const double S = as_d(report.S);
  double kappa_sum = 0;
  double excess_sum = 0;  // sum of kappa_i - 2 pi chi_i = -(total Gauss curvature)
  long long chi_union = 0;

  for (std::size_t i = 0; i < data.regions.size(); ++i) {
    const Region& r = data.regions[i];
    const double Ii = as_d(r.index);
    const double m = as_d(r.m);
    const double e = as_d(r.e);
    const double g = as_d(r.genus);
    const long long chi = r.euler_characteristic();
    chi_union += chi;
    kappa_sum += r.kappa;
    excess_sum += r.kappa - 2 * kPi * as_d(chi);

    if (r.index == 1) {
      const bool pair_ok = (r.e == 2 && r.m == 2) || (r.e == 1 && r.m == 3);
      b.add("index_one_type", i,
            "I(D) = 1 => orientable, g(D) = 0, (e, m) in {(2, 2), (1, 3)}",
            {{r.orientable ? 0.0 : 1.0, 0.0}, {g, 0.0}, {pair_ok ? 0.0 : 1.0, 0.0}});
    } else if (r.orientable) {
      b.add("orientable_higher_index", i,
            "I(D) >= 2, orientable => m <= 3 I(D) - 1, e <= 3 I(D) - 2, g(D) <= 3 I(D) - 4",
            {{m, 3 * Ii - 1}, {e, 3 * Ii - 2}, {g, 3 * Ii - 4}});
    }
    if (!r.orientable) {
      b.add("nonorientable", i,
            "non-orientable => I(D) >= 2, m <= 3 I(D) - 1, e <= 3 I(D) - 2, g(D) <= 6 I(D) - 8",
            {{2, Ii}, {m, 3 * Ii - 1}, {e, 3 * Ii - 2}, {g, 6 * Ii - 8}});
    }
    b.add("euler_characteristic", i, "chi(D) >= -6 I(D) + 2 m + e",
          {{-6 * Ii + 2 * m + e, as_d(chi)}}, false, "chi = " + std::to_string(chi));
    b.add("boundary_curvature", i, "|kappa(D) - 2 pi m| <= tau / m",
          {{std::abs(r.kappa - 2 * kPi * m), kTau / m}});
    b.add("region_total_curvature", i, "-int_D K = kappa(D) - 2 pi chi(D) > 3 pi",
          {{3 * kPi, r.kappa - 2 * kPi * as_d(chi)}}, true);
    const double length_bound = (2 * kPi * m + 1) * r.r_F;
    if (r.boundary_length) {
      b.add("boundary_length", i, "L(dD) <= (2 pi m + 1) r_F <= (2 pi m + 1) delta / 2",
            {{*r.boundary_length, length_bound}, {length_bound, (2 * kPi * m + 1) * data.delta / 2}});
    }
  }
  report.chi_union = chi_union;

  const std::string no_regions = "no concentration regions (k = 0)";
  if (data.k() == 0) {
    b.skip("euler_characteristic_union", "chi(union D) >= -6 I + 2 S + e", no_regions);
  } else {
    b.add("euler_characteristic_union", std::nullopt, "chi(union D) >= -6 I + 2 S + e",
          {{-6 * I + 2 * S + as_d(report.e), as_d(chi_union)}});
  }
  b.add("total_boundary_curvature", std::nullopt,
        "2 pi S - tau k / 2 <= sum kappa(D) <= 2 pi S + tau k / 2",
        {{2 * kPi * S - kTau * k / 2, kappa_sum}, {kappa_sum, 2 * kPi * S + kTau * k / 2}});
  if (data.k() == 0) {
    b.skip("concentrated_total_curvature", "-int_{union D} K > 3 k pi", no_regions);
  } else {
    b.add("concentrated_total_curvature", std::nullopt, "-int_{union D} K > 3 k pi",
          {{3 * k * kPi, excess_sum}}, true);
  }

  const std::string genus_formula = "0 <= g(M) - g(M~) <= 3 I - 2";
  if (data.k() == 0) {
    b.skip("genus_drop", genus_formula, no_regions);
  } else if (!data.M_orientable) {
    b.skip("genus_drop", genus_formula, "M is non-orientable");
  } else if (!data.genus_M || !data.genus_Mtilde) {
    b.skip("genus_drop", genus_formula, "genus_M and genus_Mtilde not given");
  } else {
    const double drop = as_d(*data.genus_M - *data.genus_Mtilde);
    b.add("genus_drop", std::nullopt, genus_formula, {{0, drop}, {drop, 3 * I - 2}});
  }

  double spin_area = 0;
  for (const Region& r : data.regions) spin_area += 2 * kPi * as_d(r.m) * r.r_F * r.r_F;
  const double floor_area = k * kPi * data.delta1 * data.delta1;
  const std::string area_formula =
      "Area(M~) >= 2 pi sum m r_F^2 >= Area(union D) >= k pi delta1^2";
  if (data.k() == 0) {
    b.skip("area_chain", area_formula, no_regions);
  } else {
    std::ostringstream detail;
    detail << std::setprecision(8) << "2 pi sum m r_F^2 = " << spin_area
           << ", k pi delta1^2 = " << floor_area;
    std::vector<std::pair<double, double>> conds{{floor_area, spin_area}};
    if (data.area_Mtilde) conds.push_back({spin_area, *data.area_Mtilde});
    if (data.area_concentrated) {
      conds.push_back({*data.area_concentrated, spin_area});
      conds.push_back({floor_area, *data.area_concentrated});
    }
    StructureCheck c;
    c.key = "area_chain";
    c.formula = area_formula;
    c.detail = detail.str();
    c.slack = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const auto& [lhs, rhs] : conds) {
      c.slack = std::min(c.slack, rhs - lhs);
      ok = ok && rhs >= lhs;
    }
    c.verdict = ok ? Verdict::satisfied : Verdict::violated;
    report.checks.push_back(std::move(c));
  }

  // kappa(M~) = -sum kappa(D); dividing by K1 < 0 gives a positive quantity.
  const double negK1 = -k1(params, CurvatureMode::concentrated);
  const double scaled = kappa_sum / negK1;
  b.add("scaled_total_curvature", std::nullopt,
        "0 < kappa(M~) / K1 <= (2 pi S + tau I) / (-K1) <= (6 pi + 1) I / (-K1)",
        {{data.k() == 0 ? -1.0 : 0.0, scaled},
         {scaled, (2 * kPi * S + kTau * I) / negK1},
         {S, 3 * I}},
        false, "kappa(M~) / K1 = " + std::to_string(scaled));

  const bool all_lengths =
      std::all_of(data.regions.begin(), data.regions.end(),
                  [](const Region& r) { return r.boundary_length.has_value(); });
  const std::string total_length_formula =
      "L <= (2 pi S + k) delta / 2 <= (6 pi + 1) I / 4";
  const double total_bound = (2 * kPi * S + k) * data.delta / 2;
  if (data.k() > 0 && all_lengths) {
    double total = 0;
    for (const Region& r : data.regions) total += *r.boundary_length;
    b.add("total_boundary_length", std::nullopt, total_length_formula,
          {{total, total_bound}, {total_bound, (6 * kPi + 1) * I / 4}});
  } else {
    b.add("total_boundary_length", std::nullopt, total_length_formula,
          {{total_bound, (6 * kPi + 1) * I / 4}}, false, "bound chain only");
  }
  return report;
}

std::string to_json(const StructureReport& report, const StructureData& data,
                    const GeometryParams& params, int indent) {
  using nlohmann::json;
  json j;
  j["params"] = {{"I", params.I}, {"A1", number_to_json(params.A1)},
                 {"K1", number_to_json(k1(params, CurvatureMode::concentrated))},
                 {"tau", number_to_json(kTau)}};
  j["delta"] = number_to_json(data.delta);
  j["delta1"] = number_to_json(data.delta1);
  j["k"] = report.k;
  j["e"] = report.e;
  j["S"] = report.S;
  j["chi_union"] = report.chi_union;
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    json item = {{"key", c.key},
                 {"verdict", to_string(c.verdict)},
                 {"slack", number_to_json(c.slack)},
                 {"formula", c.formula},
                 {"detail", c.detail}};
    item["region"] = c.region ? json(*c.region + 1) : json(nullptr);
    j["checks"].push_back(std::move(item));
  }
  j["violated"] = report.violated_keys();
  return j.dump(indent);
}

void write_table(std::ostream& out, const StructureReport& report) {
  out << "k=" << report.k << " e=" << report.e << " S=" << report.S
      << " chi(union)=" << report.chi_union << "\n\n";
  std::size_t w = 12;
  for (const auto& c : report.checks) w = std::max(w, c.key.size());
  w += 2;
  out << std::left << std::setw(int(w)) << "check" << std::setw(8) << "region" << std::setw(16)
      << "verdict" << std::setw(14) << "slack" << "formula\n";
  for (const auto& c : report.checks) {
    std::ostringstream slack;
    slack << std::setprecision(6) << c.slack;
    out << std::left << std::setw(int(w)) << c.key << std::setw(8)
        << (c.region ? std::to_string(*c.region + 1) : std::string("-")) << std::setw(16)
        << to_string(c.verdict) << std::setw(14)
        << (c.verdict == Verdict::not_applicable ? std::string("-") : slack.str()) << c.formula;
    if (!c.detail.empty()) out << "  [" << c.detail << ']';
    out << '\n';
  }
}

}  // namespace cmcb
