#pragma once
#include "table.hpp"

#include <string>

namespace ivm {

// Runs one named command (validate | theorem1 | rate | optimize | constants |
// appendixB) from key=value config text; validates keys and values up front.
Table run_command(const std::string& command, const std::string& config_text);

}  // namespace ivm
