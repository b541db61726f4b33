#include "csmcalc/chow.hpp"

#include <algorithm>
#include <string>

#include "csmcalc/error.hpp"

namespace csmcalc {

namespace {

void check_dim(int n) {
  if (n < 0) throw Error(ErrorKind::validation, "negative ambient dimension");
}

void check_same(int a, int b) {
  if (a != b)
    throw Error(ErrorKind::dimension_mismatch,
                "ambient dimension mismatch: " + std::to_string(a) + " vs " +
                    std::to_string(b));
}

std::vector<Rational> checked_coeffs(int n, std::vector<Rational> coeffs) {
  check_dim(n);
  if (coeffs.size() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrorKind::validation,
                "expected " + std::to_string(n + 1) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  return coeffs;
}

std::vector<Rational> padded(int n, std::initializer_list<Rational> terms) {
  check_dim(n);
  std::vector<Rational> v(terms);
  v.resize(static_cast<std::size_t>(n) + 1);
  return v;
}

}  // namespace

// HSeries

HSeries::HSeries(int ambient_dim)
    : n_(ambient_dim), coeffs_((check_dim(ambient_dim), ambient_dim + 1)) {}

HSeries::HSeries(int ambient_dim, std::vector<Rational> coeffs)
    : n_(ambient_dim), coeffs_(checked_coeffs(ambient_dim, std::move(coeffs))) {}

HSeries HSeries::from_terms(int ambient_dim, std::initializer_list<Rational> terms) {
  return HSeries(ambient_dim, padded(ambient_dim, terms));
}

HSeries HSeries::one(int ambient_dim) {
  HSeries s(ambient_dim);
  s.coeffs_[0] = 1;
  return s;
}

HSeries HSeries::linear(int ambient_dim, const Rational& c0, const Rational& c1) {
  HSeries s(ambient_dim);
  s.coeffs_[0] = c0;
  if (ambient_dim >= 1) s.coeffs_[1] = c1;
  return s;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  check_same(n_, o.n_);
  for (int k = 0; k <= n_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  check_same(n_, o.n_);
  for (int k = 0; k <= n_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HSeries& HSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

// GradedClass

GradedClass::GradedClass(int ambient_dim)
    : n_(ambient_dim), coeffs_((check_dim(ambient_dim), ambient_dim + 1)) {}

GradedClass::GradedClass(int ambient_dim, std::vector<Rational> coeffs_by_codim)
    : n_(ambient_dim),
      coeffs_(checked_coeffs(ambient_dim, std::move(coeffs_by_codim))) {}

GradedClass GradedClass::from_terms(int ambient_dim,
                                    std::initializer_list<Rational> terms) {
  return GradedClass(ambient_dim, padded(ambient_dim, terms));
}

GradedClass GradedClass::linear_space(int ambient_dim, int dim, const Rational& c) {
  GradedClass a(ambient_dim);
  if (dim < 0 || dim > ambient_dim)
    throw Error(ErrorKind::validation,
                "linear space of dimension " + std::to_string(dim) +
                    " does not fit in P^" + std::to_string(ambient_dim));
  a.coeffs_[ambient_dim - dim] = c;
  return a;
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool GradedClass::is_pure_of_dimension(int dim) const {
  for (int k = 0; k <= n_; ++k)
    if (n_ - k != dim && !coeffs_[k].is_zero()) return false;
  return true;
}

bool GradedClass::supported_in_dimension(int dim) const {
  for (int k = 0; k <= n_; ++k)
    if (n_ - k > dim && !coeffs_[k].is_zero()) return false;
  return true;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  check_same(n_, o.n_);
  for (int k = 0; k <= n_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  check_same(n_, o.n_);
  for (int k = 0; k <= n_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HSeries LineBundleOnPn::total_chern(int ambient_dim) const {
  return HSeries::linear(ambient_dim, 1, twist);
}

// Operations

HSeries series_mul(const HSeries& a, const HSeries& b) {
  check_same(a.ambient_dim(), b.ambient_dim());
  const int n = a.ambient_dim();
  HSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

HSeries series_invert(const HSeries& a) {
  if (a[0].is_zero())
    throw Error(ErrorKind::non_unit, "series has zero constant term");
  const int n = a.ambient_dim();
  HSeries b(n);
  const Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return b;
}

HSeries series_int_pow(const HSeries& a, long e) {
  HSeries base = e < 0 ? series_invert(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  HSeries result = HSeries::one(a.ambient_dim());
  while (k > 0) {
    if (k & 1UL) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

GradedClass cap(const HSeries& s, const GradedClass& a) {
  check_same(s.ambient_dim(), a.ambient_dim());
  const int n = a.ambient_dim();
  GradedClass out(n);
  for (int j = 0; j <= n; ++j) {
    if (a.codim(j).is_zero()) continue;
    for (int i = 0; i + j <= n; ++i) out.codim(i + j) += s[i] * a.codim(j);
  }
  return out;
}

GradedClass dual(const GradedClass& a, int relative_dim) {
  const int n = a.ambient_dim();
  GradedClass out = a;
  for (int k = 0; k <= n; ++k) {
    const int p = n - k;
    if ((p - relative_dim) % 2 != 0) out.codim(k) = -out.codim(k);
  }
  return out;
}

GradedClass twist(const GradedClass& a, const LineBundleOnPn& l, int relative_dim) {
  const int n = a.ambient_dim();
  if (l.twist.is_zero()) return a;
  const HSeries c = l.total_chern(n);
  GradedClass out(n);
  for (int k = 0; k <= n; ++k) {
    if (a.codim(k).is_zero()) continue;
    const int p = n - k;
    GradedClass piece(n);
    piece.codim(k) = a.codim(k);
    out += cap(series_int_pow(c, p - relative_dim), piece);
  }
  return out;
}

HSeries tangent_chern_pn(int n) {
  check_dim(n);
  HSeries s(n);
  for (int k = 0; k <= n; ++k) s[k] = binomial(n + 1, k);
  return s;
}

}  // namespace csmcalc
