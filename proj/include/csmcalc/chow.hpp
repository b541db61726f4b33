#ifndef CSMCALC_CHOW_HPP
#define CSMCALC_CHOW_HPP

// Chow classes of projective space and truncated series in the hyperplane
// class H, with H^{n+1} = 0 throughout.

#include <initializer_list>
#include <span>
#include <vector>

#include "csmcalc/rational.hpp"

namespace csmcalc {

/// Polynomial in H truncated mod H^{n+1}; coefficient k multiplies H^k.
class HSeries {
 public:
  /// The zero series on P^n.
  explicit HSeries(int ambient_dim);
  /// Throws Error(validation) unless coeffs has exactly n+1 entries.
  HSeries(int ambient_dim, std::vector<Rational> coeffs);
  /// Shorter lists are zero-padded; longer lists are truncated.
  static HSeries from_terms(int ambient_dim, std::initializer_list<Rational> terms);

  static HSeries one(int ambient_dim);
  /// c0 + c1*H
  static HSeries linear(int ambient_dim, const Rational& c0, const Rational& c1);

  int ambient_dim() const { return n_; }
  const Rational& operator[](int degree) const { return coeffs_.at(degree); }
  Rational& operator[](int degree) { return coeffs_.at(degree); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const Rational& s);

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const Rational& s) { return a *= s; }
  friend HSeries operator*(const Rational& s, HSeries a) { return a *= s; }
  friend bool operator==(const HSeries&, const HSeries&) = default;

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

/// Class on P^n indexed by codimension: coefficient k multiplies [P^{n-k}].
class GradedClass {
 public:
  explicit GradedClass(int ambient_dim);
  GradedClass(int ambient_dim, std::vector<Rational> coeffs_by_codim);
  static GradedClass from_terms(int ambient_dim, std::initializer_list<Rational> terms);

  /// c * [P^dim]
  static GradedClass linear_space(int ambient_dim, int dim, const Rational& c = 1);

  int ambient_dim() const { return n_; }
  const Rational& codim(int k) const { return coeffs_.at(k); }
  Rational& codim(int k) { return coeffs_.at(k); }
  /// Coefficient of [P^p].
  const Rational& dim(int p) const { return coeffs_.at(n_ - p); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when every piece of dimension other than `dim` vanishes.
  bool is_pure_of_dimension(int dim) const;
  /// True when no piece has dimension greater than `dim`.
  bool supported_in_dimension(int dim) const;

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const Rational& s);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const Rational& s) { return a *= s; }
  friend GradedClass operator*(const Rational& s, GradedClass a) { return a *= s; }
  friend GradedClass operator-(GradedClass a) { return a *= Rational(-1); }
  friend bool operator==(const GradedClass&, const GradedClass&) = default;

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

/// Line bundle with first Chern class twist*H. Non-integer twists stand for
/// formal divisors such as rho*X.
struct LineBundleOnPn {
  Rational twist;

  /// 1 + twist*H
  HSeries total_chern(int ambient_dim) const;
};

HSeries series_mul(const HSeries& a, const HSeries& b);
inline HSeries operator*(const HSeries& a, const HSeries& b) { return series_mul(a, b); }

/// Throws Error(non_unit) on a zero constant term.
HSeries series_invert(const HSeries& a);
HSeries series_int_pow(const HSeries& a, long e);

/// Truncated convolution: the coefficient of [P^{n-k}] is sum_{i+j=k} s_i A_j.
GradedClass cap(const HSeries& s, const GradedClass& a);

/// Multiplies the dimension-p piece by (-1)^{p-m}, m the dimension of the
/// ambient variety the notation is taken relative to.
GradedClass dual(const GradedClass& a, int relative_dim);
inline GradedClass dual(const GradedClass& a) { return dual(a, a.ambient_dim()); }

/// Multiplies the dimension-p piece by c(L)^{p-m}.
GradedClass twist(const GradedClass& a, const LineBundleOnPn& l, int relative_dim);
inline GradedClass twist(const GradedClass& a, const LineBundleOnPn& l) {
  return twist(a, l, a.ambient_dim());
}

/// (1+H)^{n+1} mod H^{n+1}.
HSeries tangent_chern_pn(int n);

}  // namespace csmcalc

#endif  // CSMCALC_CHOW_HPP
