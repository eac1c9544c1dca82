#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmcb {

/// Input that does not satisfy a documented format or invariant.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent decimal parsing; the whole token must be consumed.
double parse_double(std::string_view token, std::string_view what);
long long parse_integer(std::string_view token, std::string_view what);

std::string_view trim(std::string_view s);

}  // namespace cmcb
