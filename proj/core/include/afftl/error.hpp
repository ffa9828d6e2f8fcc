#pragma once

#include <stdexcept>
#include <string>

namespace afftl {

// Domain errors: bad input to a public operation. Internal invariant
// breaches are reported as std::logic_error instead.
enum class ErrorKind {
  invalid_config,
  out_of_range,
  precondition,
  invalid_diagram,
  inadmissible,
  mismatched_rank,
  bound_exceeded,
  parse
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::invalid_config: return "invalid_config";
    case ErrorKind::out_of_range: return "out_of_range";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::invalid_diagram: return "invalid_diagram";
    case ErrorKind::inadmissible: return "inadmissible";
    case ErrorKind::mismatched_rank: return "mismatched_rank";
    case ErrorKind::bound_exceeded: return "bound_exceeded";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace afftl
