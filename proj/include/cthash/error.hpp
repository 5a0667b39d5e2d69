#pragma once

#include <stdexcept>
#include <string>

namespace cthash {

enum class ErrorKind {
  Shape,        // operands with incompatible dimensions
  Range,        // value or index outside its admissible interval
  Overflow,     // checked arithmetic would wrap
  NotApplicable,
  Limit,        // a configured search/size cap was exceeded
  Validation,   // parameter hypotheses or positivity violated
  Format,       // malformed text input
  Infeasible,   // no table realizes the requested marginals
  Generation,   // rejection sampling gave up
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cthash
