#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cmcb/estimates.hpp"

namespace cmcb {

enum class Verdict { satisfied, violated, vacuous, not_applicable, not_checked };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct ConstantEntry {
  std::string key;
  double value = 0;
  std::string formula;

  bool operator==(const ConstantEntry&) const = default;
};

struct InequalityEntry {
  std::string key;
  std::string relation;  ///< how `observed` compares to `bound`: ">=", ">", "<="
  double bound = 0;
  std::optional<double> observed;
  Verdict verdict = Verdict::not_checked;
  std::string formula;
  std::string note;

  bool operator==(const InequalityEntry&) const = default;
};

struct BoundsReport {
  GeometryParams params;
  std::optional<long long> genus;
  std::vector<ConstantEntry> constants;
  std::vector<InequalityEntry> inequalities;
  std::vector<std::string> notes;
  /// Set when the input only approximates the hypotheses (e.g. a non-CMC mesh);
  /// violations are then reported but do not fail the run.
  bool advisory = false;

  const ConstantEntry* constant(const std::string& key) const;
  const InequalityEntry* inequality(const std::string& key) const;
  bool any_violated() const;
  /// 0 when every checked inequality holds or is vacuous (or advisory), 1 otherwise.
  int exit_code() const;

  bool operator==(const BoundsReport& other) const;
};

/// Every named constant for the given params.
std::vector<ConstantEntry> evaluate_constants(const GeometryParams& params);

/// Constants plus the genus-dependent bounds, nothing observed.
BoundsReport bounds_report(const GeometryParams& params, long long genus);

/// Evaluates every applicable inequality against an observed surface.
/// Requires H <= H0 and index <= I.
BoundsReport check_surface(const SurfaceSummary& summary, const GeometryParams& params);

std::string to_json(const BoundsReport& report, int indent = 2);
BoundsReport bounds_report_from_json(const std::string& text);
void write_table(std::ostream& out, const BoundsReport& report);

}  // namespace cmcb
