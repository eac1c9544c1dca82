#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cmcb/parse.hpp"
#include "cmcb/structure.hpp"

using namespace cmcb;

namespace {

GeometryParams params(long long I) {
  GeometryParams p;
  p.I = I;
  return p;
}

Region annulus(double kappa) {
  Region r;
  r.e = 2;
  r.m = 2;
  r.index = 1;
  r.r_F = 0.2;
  r.kappa = kappa;
  return r;
}

const StructureCheck* find(const StructureReport& rep, const std::string& key,
                           std::optional<std::size_t> region = std::nullopt) {
  for (const auto& c : rep.checks) {
    if (c.key == key && (!region || c.region == region)) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("euler characteristic of a region") {
  Region r;
  r.e = 2;
  r.genus = 1;
  CHECK(r.euler_characteristic() == -2);
  r.orientable = false;
  CHECK(r.euler_characteristic() == -2);
  r.genus = 3;
  CHECK(r.euler_characteristic() == -4);
}

TEST_CASE("index one regions") {
  StructureData d;
  d.regions = {annulus(4 * kPi + 0.05)};
  auto rep = validate_structure(d, params(2));
  CHECK(find(rep, "index_one_type")->verdict == Verdict::satisfied);
  CHECK_FALSE(rep.any_violated());

  d.regions[0].m = 3;  // (e, m) = (2, 3)
  d.regions[0].kappa = 6 * kPi;
  rep = validate_structure(d, params(2));
  CHECK(find(rep, "index_one_type")->verdict == Verdict::violated);

  d.regions[0] = annulus(4 * kPi + 0.05);
  d.regions[0].orientable = false;
  rep = validate_structure(d, params(2));
  CHECK(find(rep, "index_one_type")->verdict == Verdict::violated);
}

TEST_CASE("higher index limits") {
  StructureData d;
  Region r = annulus(14 * kPi);
  r.m = 7;
  r.index = 2;
  d.regions = {r};
  auto rep = validate_structure(d, params(2));
  CHECK(find(rep, "orientable_higher_index")->verdict == Verdict::violated);
  CHECK(find(rep, "index_one_type") == nullptr);

  r.m = 5;
  r.kappa = 10 * kPi;
  d.regions = {r};
  rep = validate_structure(d, params(2));
  CHECK(find(rep, "orientable_higher_index")->verdict == Verdict::satisfied);

  r.orientable = false;
  r.genus = 4;
  d.regions = {r};
  rep = validate_structure(d, params(2));
  CHECK(find(rep, "nonorientable")->verdict == Verdict::satisfied);
  r.genus = 5;
  r.index = 1;
  d.regions = {r};
  rep = validate_structure(d, params(2));
  CHECK(find(rep, "nonorientable")->verdict == Verdict::violated);
}

TEST_CASE("boundary curvature tolerance") {
  StructureData d;
  d.regions = {annulus(4 * kPi + kTau / 2 - 1e-9)};
  auto rep = validate_structure(d, params(1));
  CHECK(find(rep, "boundary_curvature")->verdict == Verdict::satisfied);
  CHECK(find(rep, "boundary_curvature")->slack < 1e-8);
  d.regions = {annulus(4 * kPi + kTau / 2 + 1e-3)};
  rep = validate_structure(d, params(1));
  CHECK(find(rep, "boundary_curvature")->verdict == Verdict::violated);
}

TEST_CASE("region total curvature is strict") {
  StructureData d;
  // chi = 0 for the annulus: kappa itself must exceed 3 pi
  Region r = annulus(3 * kPi);
  r.m = 2;
  d.regions = {r};
  const auto rep = validate_structure(d, params(1));
  CHECK(find(rep, "region_total_curvature")->verdict == Verdict::violated);
}

TEST_CASE("area chain example") {
  StructureData d;
  d.delta1 = 0.04;
  Region a = annulus(4 * kPi + 0.1);
  Region b;
  b.e = 1;
  b.m = 3;
  b.r_F = 0.04;
  b.kappa = 6 * kPi - 0.05;
  d.regions = {a, b};
  d.area_Mtilde = 5;
  d.area_concentrated = 0.3;
  const auto rep = validate_structure(d, params(4));
  const auto* c = find(rep, "area_chain");
  REQUIRE(c);
  CHECK(c->verdict == Verdict::satisfied);
  // 2 pi (2 * 0.04 + 3 * 0.0016) and k pi delta1^2
  CHECK(c->detail.find("0.5328") != std::string::npos);
  CHECK(c->detail.find("0.010053") != std::string::npos);
  CHECK(c->slack == doctest::Approx(2 * kPi * (2 * 0.04 + 3 * 0.0016) - 0.3));

  d.area_concentrated = 0.005;
  CHECK(find(validate_structure(d, params(4)), "area_chain")->verdict == Verdict::violated);
}

TEST_CASE("aggregate checks without regions") {
  StructureData d;
  const auto rep = validate_structure(d, params(1));
  CHECK_FALSE(rep.any_violated());
  CHECK(find(rep, "concentrated_total_curvature")->verdict == Verdict::not_applicable);
}

TEST_CASE("genus drop") {
  StructureData d;
  d.regions = {annulus(4 * kPi + 0.05)};
  d.genus_M = 5;
  d.genus_Mtilde = 1;
  CHECK(find(validate_structure(d, params(2)), "genus_drop")->verdict == Verdict::satisfied);
  d.genus_M = 6;
  CHECK(find(validate_structure(d, params(2)), "genus_drop")->verdict == Verdict::violated);
  d.genus_M = 0;
  CHECK(find(validate_structure(d, params(2)), "genus_drop")->verdict == Verdict::violated);
}

TEST_CASE("input validation") {
  StructureData d;
  d.regions = {annulus(4 * kPi), annulus(4 * kPi)};
  CHECK_THROWS_AS(validate_structure(d, params(1)), InputError);  // k > I
  d.delta1 = 0.04;
  d.regions[1].r_F = 0.1;
  CHECK_THROWS_AS(validate_structure(d, params(2)), InputError);  // separation
  d.regions[1].r_F = 0.045;
  CHECK_NOTHROW(validate_structure(d, params(2)));
  d.regions[1].r_F = 0.01;
  CHECK_THROWS_AS(validate_structure(d, params(2)), InputError);  // below delta1
  d.regions = {annulus(4 * kPi)};
  d.regions[0].m = 1;
  CHECK_THROWS_AS(validate_structure(d, params(2)), InputError);
  d.regions[0].m = 2;
  d.delta = 2;
  CHECK_THROWS_AS(validate_structure(d, params(2)), InputError);
}

TEST_CASE("violated keys and json") {
  StructureData d;
  Region r = annulus(14 * kPi);
  r.m = 7;
  r.index = 2;
  d.regions = {r};
  const auto rep = validate_structure(d, params(2));
  const auto keys = rep.violated_keys();
  CHECK(std::find(keys.begin(), keys.end(), "orientable_higher_index") != keys.end());
  CHECK(rep.exit_code() == 1);
  const auto j = nlohmann::json::parse(to_json(rep, d, params(2)));
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == rep.checks.size());
  std::ostringstream out;
  write_table(out, rep);
  CHECK(out.str().find("orientable_higher_index") != std::string::npos);
}
