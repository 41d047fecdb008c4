#pragma once

#include "steady/problem.hpp"

#include <string>

namespace steady {

/// YAML problem description; see README for the keys. Throws InvalidConfig
/// (with line and key) or UnsupportedCase.
BvpSpec parse_config(const std::string& text);
BvpSpec load_config(const std::string& path);

}  // namespace steady
