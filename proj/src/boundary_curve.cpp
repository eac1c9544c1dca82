#include "cmcb/boundary_curve.hpp"

#include <iomanip>
#include <limits>
#include <string>

#include "cmcb/parse.hpp"

namespace cmcb {

BoundaryCurve<double> read_boundary_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "s,kappa") {
    throw InputError("boundary curve CSV: expected header 's,kappa'");
  }
  std::vector<BoundaryCurve<double>::Sample> samples;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw InputError("boundary curve CSV: row " + std::to_string(row) + " must have two fields");
    }
    const std::string where = "boundary curve CSV row " + std::to_string(row);
    samples.push_back({parse_double(view.substr(0, comma), where + " s"),
                       parse_double(view.substr(comma + 1), where + " kappa")});
  }
  try {
    return BoundaryCurve<double>(std::move(samples));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void write_boundary_curve_csv(std::ostream& out, const BoundaryCurve<double>& curve) {
  out << "s,kappa\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& x : curve.samples()) out << x.s << ',' << x.kappa << '\n';
}

}  // namespace cmcb
