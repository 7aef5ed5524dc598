#pragma once

#include <string>
#include <vector>

namespace coneterm {

/// Command-line driver. Exit codes: 0 = decided (either answer),
/// 2 = INCONCLUSIVE, 1 = input or usage error.
int run(const std::vector<std::string>& args);

}  // namespace coneterm
