#pragma once

#include <stdexcept>
#include <string>

namespace lv {

// Raised for any domain-level failure (bad input, unsupported configuration,
// degenerate elimination). The CLI maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lv
