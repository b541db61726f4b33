#include "csmcalc/rational.hpp"

#include <cctype>
#include <ostream>

#include "csmcalc/error.hpp"

namespace csmcalc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::non_unit: return "non-unit";
    case ErrorKind::degenerate_invariants: return "degenerate-invariants";
    case ErrorKind::underdetermined: return "underdetermined";
    case ErrorKind::inconsistent: return "inconsistent";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::validation, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::parse,
                "malformed rational '" + std::string(text) + "'");
  Rational r;
  r.q_.get_num().set_str(std::string(num), 10);
  r.q_.get_den().set_str(std::string(den), 10);
  if (r.q_.get_den() == 0)
    throw Error(ErrorKind::parse,
                "zero denominator in '" + std::string(text) + "'");
  r.q_.canonicalize();
  if (negative) r.q_ = -r.q_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::validation, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return Rational(1) / pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational binomial(long top, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational(top - i) / Rational(i + 1);
  return r;
}

}  // namespace csmcalc
