#pragma once

#include <stdexcept>
#include <string>

namespace vat {

// All loader and computation failures surface as this exception.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

}  // namespace vat
