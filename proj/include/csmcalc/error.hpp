#ifndef CSMCALC_ERROR_HPP
#define CSMCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace csmcalc {

enum class ErrorKind {
  parse,
  validation,
  dimension_mismatch,
  non_unit,
  degenerate_invariants,
  underdetermined,
  inconsistent,
};

/// Every failure raised by the engine carries one of the kinds above so
/// front ends can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace csmcalc

#endif  // CSMCALC_ERROR_HPP
