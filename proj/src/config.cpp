#include "cmcb/config.hpp"

#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "cmcb/parse.hpp"

namespace cmcb {

namespace {

std::string scalar(const YAML::Node& node, const std::string& where) {
  if (!node.IsScalar()) throw InputError(where + ": expected a scalar value");
  return node.Scalar();
}

double number(const YAML::Node& node, const std::string& where) {
  return parse_double(scalar(node, where), where);
}

long long integer(const YAML::Node& node, const std::string& where) {
  return parse_integer(scalar(node, where), where);
}

bool boolean(const YAML::Node& node, const std::string& where) {
  const std::string s = scalar(node, where);
  if (s == "true") return true;
  if (s == "false") return false;
  throw InputError(where + ": expected true or false, got '" + s + "'");
}

void require_map(const YAML::Node& node, const std::string& where) {
  if (!node.IsMap()) throw InputError(where + ": expected a mapping");
}

Region parse_region(const YAML::Node& node, const std::string& where) {
  require_map(node, where);
  Region r;
  bool have_kappa = false, have_rF = false;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string at = where + "." + key;
    if (key == "e") r.e = integer(kv.second, at);
    else if (key == "m") r.m = integer(kv.second, at);
    else if (key == "index") r.index = integer(kv.second, at);
    else if (key == "genus") r.genus = integer(kv.second, at);
    else if (key == "orientable") r.orientable = boolean(kv.second, at);
    else if (key == "r_F") { r.r_F = number(kv.second, at); have_rF = true; }
    else if (key == "kappa") { r.kappa = number(kv.second, at); have_kappa = true; }
    else if (key == "boundary_length") r.boundary_length = number(kv.second, at);
    else throw InputError("unknown key '" + at + "'");
  }
  if (!have_kappa) throw InputError(where + ": missing key 'kappa'");
  if (!have_rF) throw InputError(where + ": missing key 'r_F'");
  return r;
}

StructureData parse_structure(const YAML::Node& node) {
  require_map(node, "structure");
  StructureData s;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string at = "structure." + key;
    if (key == "delta") s.delta = number(kv.second, at);
    else if (key == "delta1") s.delta1 = number(kv.second, at);
    else if (key == "M_orientable") s.M_orientable = boolean(kv.second, at);
    else if (key == "genus_M") s.genus_M = integer(kv.second, at);
    else if (key == "genus_Mtilde") s.genus_Mtilde = integer(kv.second, at);
    else if (key == "area_Mtilde") s.area_Mtilde = number(kv.second, at);
    else if (key == "area_concentrated") s.area_concentrated = number(kv.second, at);
    else if (key == "regions") {
      if (!kv.second.IsSequence()) throw InputError(at + ": expected a list");
      std::size_t i = 0;
      for (const auto& item : kv.second) {
        s.regions.push_back(parse_region(item, at + "[" + std::to_string(i++) + "]"));
      }
    } else {
      throw InputError("unknown key '" + at + "'");
    }
  }
  return s;
}

SurfaceSummary parse_observed(const YAML::Node& node) {
  require_map(node, "observed");
  SurfaceSummary s;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    const std::string at = "observed." + key;
    if (key == "genus") s.genus = integer(kv.second, at);
    else if (key == "area") s.area = number(kv.second, at);
    else if (key == "diameter") s.diameter = number(kv.second, at);
    else if (key == "extrinsic_diameter") s.extrinsic_diameter = number(kv.second, at);
    else if (key == "H") s.H = number(kv.second, at);
    else if (key == "index") s.index = integer(kv.second, at);
    else if (key == "compact") s.compact = boolean(kv.second, at);
    else if (key == "connected") s.connected = boolean(kv.second, at);
    else throw InputError("unknown key '" + at + "'");
  }
  return s;
}

}  // namespace

void set_param(GeometryParams& p, const std::string& key, const std::string& value) {
  const std::string at = "params." + key;
  if (key == "I") p.I = parse_integer(value, at);
  else if (key == "r0") p.r0 = parse_double(value, at);
  else if (key == "K0") p.K0 = parse_double(value, at);
  else if (key == "H0") p.H0 = parse_double(value, at);
  else if (key == "Cs") p.Cs = parse_double(value, at);
  else if (key == "A1") p.A1 = parse_double(value, at);
  else if (key == "c") p.c = parse_double(value, at);
  else throw InputError("unknown key '" + at + "'");
}

Config parse_config(const std::string& text, const std::string& source, Config base) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw InputError(source + ": " + e.what());
  }
  if (root.IsNull()) return base;
  if (!root.IsMap()) throw InputError(source + ": top level must be a mapping");
  Config cfg = std::move(base);
  try {
    for (const auto& kv : root) {
      const std::string key = kv.first.as<std::string>();
      if (key == "params") {
        require_map(kv.second, "params");
        for (const auto& p : kv.second) {
          const std::string name = p.first.as<std::string>();
          set_param(cfg.params, name, scalar(p.second, "params." + name));
          cfg.params_given.insert(name);
        }
      } else if (key == "g") {
        cfg.genus = integer(kv.second, "g");
      } else if (key == "observed") {
        cfg.observed = parse_observed(kv.second);
      } else if (key == "structure") {
        cfg.structure = parse_structure(kv.second);
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    }
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  } catch (const YAML::Exception& e) {
    throw InputError(source + ": " + e.what());
  }
  return cfg;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path, std::move(base));
}

}  // namespace cmcb
