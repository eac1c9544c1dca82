#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmcb {

/// Entry point of the `cmcb` tool. `args` excludes the program name.
/// Exit status: 0 all checks hold (or advisory), 1 a check is violated, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "CMCB_CONFIG";

}  // namespace cmcb
