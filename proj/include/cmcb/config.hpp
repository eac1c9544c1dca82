#pragma once

#include <optional>
#include <set>
#include <string>

#include "cmcb/estimates.hpp"
#include "cmcb/structure.hpp"

namespace cmcb {

/// Contents of a YAML configuration document:
///
///   params:    {I, r0, K0, H0, Cs, A1, c}
///   g:         genus for `bounds`
///   observed:  {genus, area, diameter, extrinsic_diameter, H, index, compact, connected}
///   structure: {delta, delta1, M_orientable, genus_M, genus_Mtilde, area_Mtilde,
///               area_concentrated, regions: [{e, m, index, genus, orientable, r_F,
///               kappa, boundary_length}]}
///
/// Every section is optional. Unknown keys are rejected.
struct Config {
  GeometryParams params;
  std::set<std::string> params_given;  ///< keys set explicitly under `params`
  std::optional<long long> genus;
  std::optional<SurfaceSummary> observed;
  std::optional<StructureData> structure;
};

/// Parses on top of `base`; keys present in the document override it.
Config parse_config(const std::string& text, const std::string& source, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// Applies a single `params` key given as text; throws InputError for unknown keys.
void set_param(GeometryParams& params, const std::string& key, const std::string& value);

}  // namespace cmcb
