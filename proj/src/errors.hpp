#pragma once
#include <stdexcept>
#include <string>

namespace ivm {

// invalid arguments or domain violations detected before any computation
struct param_error : std::invalid_argument {
    explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// iteration caps, non-convergence, failed internal consistency checks
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ivm
