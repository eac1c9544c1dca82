#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmcb/estimates.hpp"
#include "cmcb/report.hpp"

namespace cmcb {

/// One region of concentrated curvature.
struct Region {
  long long e = 1;         ///< boundary components
  long long m = 2;         ///< total spinning of the boundary
  long long index = 1;     ///< index of the region
  long long genus = 0;     ///< genus of the oriented cover when non-orientable
  bool orientable = true;
  double r_F = 0.125;      ///< extrinsic radius of the region
  double kappa = 0;        ///< total geodesic curvature of the boundary
  std::optional<double> boundary_length;

  /// 2 - 2g - e (orientable) or 1 - g - e (g counts the oriented cover).
  long long euler_characteristic() const;
};

struct StructureData {
  std::vector<Region> regions;
  double delta = 0.5;
  double delta1 = 0.125;
  bool M_orientable = true;
  std::optional<long long> genus_M;
  std::optional<long long> genus_Mtilde;
  std::optional<double> area_Mtilde;
  std::optional<double> area_concentrated;

  std::size_t k() const { return regions.size(); }
  long long e() const;
  long long S() const;

  /// Throws InputError naming the first violated type constraint.
  void validate(const GeometryParams& params) const;
};

struct StructureCheck {
  std::string key;
  std::optional<std::size_t> region;  ///< 0-based; empty for aggregate checks
  Verdict verdict = Verdict::not_checked;
  double slack = 0;  ///< >= 0 when satisfied (> 0 for strict inequalities)
  std::string formula;
  std::string detail;
};

struct StructureReport {
  std::size_t k = 0;
  long long e = 0;
  long long S = 0;
  long long chi_union = 0;
  std::vector<StructureCheck> checks;

  bool any_violated() const;
  /// Distinct keys of violated checks, in order of first appearance.
  std::vector<std::string> violated_keys() const;
  int exit_code() const { return any_violated() ? 1 : 0; }
};

StructureReport validate_structure(const StructureData& data, const GeometryParams& params);

std::string to_json(const StructureReport& report, const StructureData& data,
                    const GeometryParams& params, int indent = 2);
void write_table(std::ostream& out, const StructureReport& report);

}  // namespace cmcb
