#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

/// Invalid input, violated invariant or out-of-domain argument.
/// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Failure inside a numerical procedure (singular system, pole hit,
/// undefined quantity). The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cqed
