#include "cmcb/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cmcb/json_util.hpp"
#include "cmcb/parse.hpp"

namespace cmcb {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::not_checked: return "not_checked";
  }
  return "not_checked";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::satisfied, Verdict::violated, Verdict::vacuous,
                    Verdict::not_applicable, Verdict::not_checked}) {
    if (to_string(v) == s) return v;
  }
  throw InputError("unknown verdict '" + s + "'");
}

const ConstantEntry* BoundsReport::constant(const std::string& key) const {
  auto it = std::find_if(constants.begin(), constants.end(),
                         [&](const ConstantEntry& e) { return e.key == key; });
  return it == constants.end() ? nullptr : &*it;
}

const InequalityEntry* BoundsReport::inequality(const std::string& key) const {
  auto it = std::find_if(inequalities.begin(), inequalities.end(),
                         [&](const InequalityEntry& e) { return e.key == key; });
  return it == inequalities.end() ? nullptr : &*it;
}

bool BoundsReport::any_violated() const {
  return std::any_of(inequalities.begin(), inequalities.end(),
                     [](const InequalityEntry& e) { return e.verdict == Verdict::violated; });
}

int BoundsReport::exit_code() const { return any_violated() && !advisory ? 1 : 0; }

namespace {

bool same_double(double a, double b) {
  return a == b || (std::isnan(a) && std::isnan(b));
}

bool same_params(const GeometryParams& a, const GeometryParams& b) {
  return a.I == b.I && same_double(a.r0, b.r0) && same_double(a.K0, b.K0) &&
         same_double(a.H0, b.H0) && same_double(a.Cs, b.Cs) && same_double(a.A1, b.A1) &&
         a.c == b.c;
}

}  // namespace

bool BoundsReport::operator==(const BoundsReport& other) const {
  return same_params(params, other.params) && genus == other.genus &&
         constants == other.constants && inequalities == other.inequalities &&
         notes == other.notes && advisory == other.advisory;
}

std::vector<ConstantEntry> evaluate_constants(const GeometryParams& params) {
  params.validate();
  std::vector<ConstantEntry> out;
  auto add = [&](std::string key, double value, std::string formula) {
    out.push_back({std::move(key), value, std::move(formula)});
  };
  const C1Parts parts = c1_parts(params);
  add("lambda", lambda(params), "lambda = max{1, 1/r0, sqrt(K0), H0}");
  add("C_A", c_A(), "C_A = pi (pi/4)^2 exp(-pi/2 - 1 + pi/4)");
  add("K1", k1(params, CurvatureMode::concentrated), "K1 = -1 - A1^2/2");
  add("K1_stable", k1(params, CurvatureMode::stable), "K1 = -1 - Cs^2/2 (stable surfaces)");
  add("C3", parts.c3, "C3 = min{2 pi / (3 |K1|), C_A / 2}");
  if (parts.c4) {
    add("C4_prime", *parts.c4_prime, "C4' = pi / |K1|");
    add("C4_double_prime", *parts.c4_double_prime, "C4'' = C_A / (12 I - 3)");
    add("C4", *parts.c4, "C4 = min{C4', C4''}");
  }
  add("C1", parts.c1, params.I >= 1 ? "C1 = min{C3, C4}" : "C1 = C3 (no concentration regions)");
  add("C", high_genus_constant(params), "C = pi / (3 + 4 Cs + 4 Cs^2)");
  add("C_hat_s", c_hat_s(params), "C^_s(1) = 1 + 2 Cs");
  add("A3", a3(params), "A3 = -4 K1");
  add("h", unit_balls_area_bound(params),
      "h(I) = I [2(6 pi + 1)/A3 (2[cosh(sqrt(A3)) - 1] + sinh(sqrt(A3))/sqrt(A3)) + 3 pi/8]");
  add("G", double(g_threshold(params)), "G(I) = max{12 I - 3, ceil(-2 K1 h(I) / pi) - 1}");
  add("h_tilde", h_tilde(params, 1), "h~(I, 1) = max of the applicable ball-area bounds at r = 1");
  if (params.c) {
    const CompactBounds cb = compact_case_bounds(params);
    add("R_c", cb.r_c, "R_c = 2 pi / sqrt(3 c)");
    add("A2", cb.a2, "A2(I, c) = h~(I, 2 (I + 1) R_c)");
  }
  return out;
}

namespace {

InequalityEntry entry(std::string key, std::string relation, double bound,
                      std::string formula) {
  InequalityEntry e;
  e.key = std::move(key);
  e.relation = std::move(relation);
  e.bound = bound;
  e.formula = std::move(formula);
  return e;
}

void judge(InequalityEntry& e, double observed) {
  e.observed = observed;
  bool ok = false;
  if (e.relation == ">=") ok = observed >= e.bound;
  else if (e.relation == ">") ok = observed > e.bound;
  else if (e.relation == "<=") ok = observed <= e.bound;
  e.verdict = ok ? Verdict::satisfied : Verdict::violated;
}

constexpr const char* kAreaUniversal = "Area(M) > C_A / lambda^2";
constexpr const char* kDiameterUniversal = "extrinsic diameter > pi / (4 lambda)";
constexpr const char* kAreaGenus = "Area(M) >= C1(I) (g + 1) / lambda^2";
constexpr const char* kAreaHighGenus = "Area(M) >= C (g + 1) / lambda^2 when g >= G(I)";
constexpr const char* kBallUpper = "Area(M) = Area(B_M(x, D)) <= h~(I, lambda D) / lambda^2";
constexpr const char* kDiameterGenusStable =
    "Diameter(M) >= arccosh[-K1 C1 (g + 1) / (2 pi) + 1] / (lambda sqrt(-K1))";
constexpr const char* kDiameterGenus =
    "Diameter(M) >= min{arccosh[-K1 C1 (g + 1) / (2 pi) + 1] / (lambda sqrt(-K1)), "
    "arccosh[C1 (g + 1) / (20 I)] / (lambda sqrt(A3))}";
constexpr const char* kCompactArea = "Area(M) <= A2(I, c) / lambda^2";
constexpr const char* kCompactDiameter = "Diameter(M) <= 2 (I + 1) R_c / lambda";
constexpr const char* kCompactGenus = "g(M) <= A2(I, c) / C1(I) - 1";
constexpr const char* kCompactness = "M is compact when 3H^2 + rho/2 >= c > 0";

double diameter_genus_bound(const GeometryParams& params, long long genus) {
  if (params.I == 0) return diameter_lower_bound(params, genus, DiameterMode::stable);
  return std::min(diameter_lower_bound(params, genus, DiameterMode::no_regions),
                  diameter_lower_bound(params, genus, DiameterMode::concentrated));
}

std::vector<InequalityEntry> genus_bounds(const GeometryParams& params, long long genus) {
  const double lam = lambda(params);
  std::vector<InequalityEntry> out;
  out.push_back(entry("area_lower_universal", ">", c_A() / (lam * lam), kAreaUniversal));
  out.push_back(entry("extrinsic_diameter_lower", ">", kPi / (4 * lam), kDiameterUniversal));
  out.push_back(entry("area_lower_genus", ">=", area_lower_bound(params, genus), kAreaGenus));
  auto high = entry("area_lower_high_genus", ">=",
                    high_genus_constant(params) * double(genus + 1) / (lam * lam),
                    kAreaHighGenus);
  if (genus < g_threshold(params)) {
    high.verdict = Verdict::not_applicable;
    high.note = "genus below G(I) = " + std::to_string(g_threshold(params));
  }
  out.push_back(high);
  out.push_back(entry("diameter_lower_genus", ">=", diameter_genus_bound(params, genus),
                      params.I == 0 ? kDiameterGenusStable : kDiameterGenus));
  if (params.c) {
    const CompactBounds cb = compact_case_bounds(params);
    out.push_back(entry("compact_area_upper", "<=", cb.area_upper, kCompactArea));
    out.push_back(entry("compact_diameter_upper", "<=", cb.diameter_upper, kCompactDiameter));
    out.push_back(entry("compact_genus_upper", "<=", cb.genus_upper_real, kCompactGenus));
  }
  return out;
}

}  // namespace

BoundsReport bounds_report(const GeometryParams& params, long long genus) {
  params.validate();
  if (genus < 0) throw InputError("genus must be nonnegative");
  BoundsReport report;
  report.params = params;
  report.genus = genus;
  report.constants = evaluate_constants(params);
  report.inequalities = genus_bounds(params, genus);
  return report;
}

BoundsReport check_surface(const SurfaceSummary& summary, const GeometryParams& params) {
  params.validate();
  summary.validate();
  if (summary.H > params.H0 * (1 + 1e-6)) {
    throw PreconditionError("check_surface: observed H exceeds H0");
  }
  if (summary.index > params.I) {
    throw PreconditionError("check_surface: observed index exceeds I");
  }

  BoundsReport report = bounds_report(params, summary.genus);
  const double lam = lambda(params);
  const bool bounded = summary.compact;
  const bool single = summary.connected;

  for (InequalityEntry& e : report.inequalities) {
    if (e.verdict == Verdict::not_applicable) continue;
    if (e.key == "area_lower_universal" || e.key == "area_lower_genus" ||
        e.key == "area_lower_high_genus") {
      if (!bounded) {
        e.verdict = Verdict::vacuous;
        e.note = "non-compact: area is infinite";
      } else {
        judge(e, summary.area);
      }
    } else if (e.key == "extrinsic_diameter_lower") {
      if (!bounded) {
        e.verdict = Verdict::vacuous;
        e.note = "non-compact: diameter is infinite";
      } else {
        judge(e, summary.extrinsic_diameter.value_or(summary.diameter));
        if (!summary.extrinsic_diameter) e.note = "intrinsic diameter used";
      }
    } else if (e.key == "diameter_lower_genus") {
      if (!single) {
        e.verdict = Verdict::not_applicable;
        e.note = "requires a connected surface";
      } else if (!bounded) {
        e.verdict = Verdict::vacuous;
        e.note = "non-compact: diameter is infinite";
      } else {
        judge(e, summary.diameter);
      }
    } else if (e.key.rfind("compact_", 0) == 0) {
      if (!single) {
        e.verdict = Verdict::not_applicable;
        e.note = "requires a connected surface";
      } else if (!bounded) {
        e.verdict = Verdict::violated;
        e.note = "surface must be compact under the scalar curvature hypothesis";
      } else if (e.key == "compact_area_upper") {
        judge(e, summary.area);
      } else if (e.key == "compact_diameter_upper") {
        judge(e, summary.diameter);
      } else {
        judge(e, double(summary.genus));
      }
    }
  }

  auto ball = entry("ball_area_upper", "<=", 0, kBallUpper);
  if (bounded && single) {
    ball.bound = h_tilde(params, lam * summary.diameter) / (lam * lam);
    judge(ball, summary.area);
  } else {
    ball.bound = std::numeric_limits<double>::infinity();
    ball.verdict = Verdict::not_applicable;
    ball.note = "requires a compact connected surface";
  }
  report.inequalities.push_back(ball);

  if (params.c) {
    auto compact = entry("compactness", ">=", 1, kCompactness);
    if (!single) {
      compact.verdict = Verdict::not_applicable;
      compact.note = "requires a connected surface";
    } else {
      judge(compact, bounded ? 1.0 : 0.0);
    }
    report.inequalities.push_back(compact);
  }
  return report;
}

std::string to_json(const BoundsReport& report, int indent) {
  json j;
  const GeometryParams& p = report.params;
  j["params"] = {{"I", p.I},        {"r0", number_to_json(p.r0)}, {"K0", number_to_json(p.K0)},
                 {"H0", number_to_json(p.H0)}, {"Cs", number_to_json(p.Cs)},
                 {"A1", number_to_json(p.A1)}, {"tau", number_to_json(kTau)}};
  j["params"]["c"] = p.c ? number_to_json(*p.c) : json(nullptr);
  j["genus"] = report.genus ? json(*report.genus) : json(nullptr);
  j["advisory"] = report.advisory;
  j["constants"] = json::array();
  for (const auto& c : report.constants) {
    j["constants"].push_back(
        {{"key", c.key}, {"value", number_to_json(c.value)}, {"formula", c.formula}});
  }
  j["inequalities"] = json::array();
  for (const auto& e : report.inequalities) {
    json item = {{"key", e.key},
                 {"relation", e.relation},
                 {"bound", number_to_json(e.bound)},
                 {"verdict", to_string(e.verdict)},
                 {"formula", e.formula},
                 {"note", e.note}};
    item["observed"] = e.observed ? number_to_json(*e.observed) : json(nullptr);
    j["inequalities"].push_back(std::move(item));
  }
  j["notes"] = report.notes;
  j["violations"] = std::count_if(report.inequalities.begin(), report.inequalities.end(),
                                  [](const auto& e) { return e.verdict == Verdict::violated; });
  return j.dump(indent);
}

BoundsReport bounds_report_from_json(const std::string& text) {
  BoundsReport report;
  try {
    const json j = json::parse(text);
    const json& p = j.at("params");
    report.params.I = p.at("I").get<long long>();
    report.params.r0 = number_from_json(p.at("r0"));
    report.params.K0 = number_from_json(p.at("K0"));
    report.params.H0 = number_from_json(p.at("H0"));
    report.params.Cs = number_from_json(p.at("Cs"));
    report.params.A1 = number_from_json(p.at("A1"));
    if (!p.at("c").is_null()) report.params.c = number_from_json(p.at("c"));
    if (!j.at("genus").is_null()) report.genus = j.at("genus").get<long long>();
    report.advisory = j.at("advisory").get<bool>();
    for (const json& c : j.at("constants")) {
      report.constants.push_back({c.at("key").get<std::string>(), number_from_json(c.at("value")),
                                  c.at("formula").get<std::string>()});
    }
    for (const json& e : j.at("inequalities")) {
      InequalityEntry item;
      item.key = e.at("key").get<std::string>();
      item.relation = e.at("relation").get<std::string>();
      item.bound = number_from_json(e.at("bound"));
      if (!e.at("observed").is_null()) item.observed = number_from_json(e.at("observed"));
      item.verdict = verdict_from_string(e.at("verdict").get<std::string>());
      item.formula = e.at("formula").get<std::string>();
      item.note = e.at("note").get<std::string>();
      report.inequalities.push_back(std::move(item));
    }
    report.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bounds report JSON: ") + e.what());
  }
  return report;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(8) << v;
  return os.str();
}

}  // namespace

void write_table(std::ostream& out, const BoundsReport& report) {
  std::size_t w = 8;
  for (const auto& c : report.constants) w = std::max(w, c.key.size());
  for (const auto& e : report.inequalities) w = std::max(w, e.key.size());
  w += 2;

  const GeometryParams& p = report.params;
  out << "params: I=" << p.I << " r0=" << fmt(p.r0) << " K0=" << fmt(p.K0) << " H0=" << fmt(p.H0)
      << " Cs=" << fmt(p.Cs) << " A1=" << fmt(p.A1) << " tau=" << fmt(kTau);
  if (p.c) out << " c=" << fmt(*p.c);
  if (report.genus) out << " g=" << *report.genus;
  out << '\n';

  out << "\nconstants\n";
  for (const auto& c : report.constants) {
    out << "  " << std::left << std::setw(int(w)) << c.key << std::setw(16) << fmt(c.value)
        << c.formula << '\n';
  }
  out << "\ninequalities\n";
  out << "  " << std::left << std::setw(int(w)) << "key" << std::setw(4) << "rel" << std::setw(16)
      << "bound" << std::setw(16) << "observed" << std::setw(16) << "verdict" << "formula\n";
  for (const auto& e : report.inequalities) {
    out << "  " << std::left << std::setw(int(w)) << e.key << std::setw(4) << e.relation
        << std::setw(16) << fmt(e.bound) << std::setw(16)
        << (e.observed ? fmt(*e.observed) : std::string("-")) << std::setw(16)
        << to_string(e.verdict) << e.formula;
    if (!e.note.empty()) out << "  [" << e.note << ']';
    out << '\n';
  }
  for (const auto& n : report.notes) out << "note: " << n << '\n';
  if (report.advisory) out << "advisory: violations do not affect the exit status\n";
}

}  // namespace cmcb
