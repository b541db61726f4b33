#include "doctest.h"

#include "csmcalc/chow.hpp"
#include "csmcalc/error.hpp"
#include "random_classes.hpp"

using namespace csmcalc;

namespace {

HSeries S(int n, std::initializer_list<Rational> t) { return HSeries::from_terms(n, t); }
GradedClass G(int n, std::initializer_list<Rational> t) { return GradedClass::from_terms(n, t); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("series_mul") {
  CHECK(S(3, {1, 1}) * S(3, {1, -1}) == S(3, {1, 0, -1}));
  HSeries p = HSeries::one(3);
  for (int i = 0; i < 4; ++i) p = series_mul(p, S(3, {1, 1}));
  CHECK(p == S(3, {1, 4, 6, 4}));
  CHECK(S(3, {1, 4}) * S(3, {1, -4, 16, -64}) == HSeries::one(3));
  CHECK(kind_of([] { (void)series_mul(HSeries::one(2), HSeries::one(3)); }) ==
        ErrorKind::dimension_mismatch);
}

TEST_CASE("series_invert") {
  CHECK(series_invert(S(3, {1, 4})) == S(3, {1, -4, 16, -64}));
  CHECK(series_invert(HSeries::one(5)) == HSeries::one(5));
  CHECK(series_invert(S(3, {1, 1, 1})) == S(3, {1, -1, 0, 1}));
  CHECK(series_invert(S(2, {2})) == S(2, {Rational(1, 2)}));
  CHECK(kind_of([] { (void)series_invert(S(3, {0, 1})); }) == ErrorKind::non_unit);
}

TEST_CASE("series_int_pow") {
  CHECK(series_int_pow(S(3, {1, 1}), -2) == S(3, {1, -2, 3, -4}));
  CHECK(series_int_pow(S(3, {5, 2, 7}), 0) == HSeries::one(3));
  CHECK(series_int_pow(S(3, {1, 1}), 4) == S(3, {1, 4, 6, 4}));
  CHECK(kind_of([] { (void)series_int_pow(S(3, {0, 1}), -1); }) == ErrorKind::non_unit);
}

TEST_CASE("cap") {
  const GradedClass a = G(3, {0, 4, -7, 10});
  CHECK(cap(HSeries::one(3), a) == a);
  CHECK(cap(S(3, {1, 4, 6, 4}), a) == G(3, {0, 4, 9, 6}));
  CHECK(cap(S(3, {1, 4}), G(3, {0, 0, 9, -18})) == G(3, {0, 0, 9, 18}));
  CHECK(kind_of([&] { (void)cap(HSeries::one(2), a); }) == ErrorKind::dimension_mismatch);
}

TEST_CASE("dual") {
  CHECK(dual(G(3, {0, 4, -7, 10}), 3) == G(3, {0, -4, -7, -10}));
  CHECK(dual(GradedClass::linear_space(4, 4), 4) == GradedClass::linear_space(4, 4));
  // Relative to a smaller ambient the signs shift by one.
  CHECK(dual(G(3, {0, 4, -7, 10}), 2) == G(3, {0, 4, 7, 10}));
}

TEST_CASE("twist") {
  CHECK(twist(G(3, {0, -4, -7, -10}), LineBundleOnPn{4}, 3) == G(3, {0, -4, 9, -18}));
  const GradedClass a = G(3, {2, 4, -7, 10});
  CHECK(twist(a, LineBundleOnPn{0}, 3) == a);
  CHECK(twist(twist(a, LineBundleOnPn{2}, 3), LineBundleOnPn{Rational(-1, 3)}, 3) ==
        twist(a, LineBundleOnPn{Rational(5, 3)}, 3));
  // A positive exponent appears when the piece has dimension above m.
  CHECK(twist(GradedClass::linear_space(2, 2), LineBundleOnPn{1}, 1) == G(2, {1, 1}));
}

TEST_CASE("tangent_chern_pn") {
  CHECK(tangent_chern_pn(3) == S(3, {1, 4, 6, 4}));
  CHECK(tangent_chern_pn(0) == HSeries::one(0));
  CHECK(tangent_chern_pn(2) == S(2, {1, 3, 3}));
}

TEST_CASE("n = 0 degenerates to scalars") {
  const HSeries s = S(0, {Rational(3, 2)});
  CHECK(series_invert(s) == S(0, {Rational(2, 3)}));
  CHECK(cap(s, G(0, {4})) == G(0, {6}));
  CHECK(twist(G(0, {4}), LineBundleOnPn{7}, 0) == G(0, {4}));
  CHECK(dual(G(0, {4}), 0) == G(0, {4}));
}

TEST_CASE("malformed classes") {
  CHECK(kind_of([] { (void)GradedClass(3, std::vector<Rational>(3)); }) == ErrorKind::validation);
  CHECK(kind_of([] { (void)HSeries(-1); }) == ErrorKind::validation);
  CHECK(kind_of([] { (void)GradedClass::linear_space(2, 3); }) == ErrorKind::validation);
  CHECK(kind_of([] { (void)(G(2, {1}) + G(3, {1})); }) == ErrorKind::dimension_mismatch);
}

TEST_CASE("support predicates") {
  const GradedClass a = G(3, {0, 0, 3, 2});
  CHECK(a.supported_in_dimension(1));
  CHECK_FALSE(a.supported_in_dimension(0));
  CHECK_FALSE(a.is_pure_of_dimension(1));
  CHECK(GradedClass::linear_space(3, 1, 5).is_pure_of_dimension(1));
  CHECK(GradedClass(3).is_pure_of_dimension(0));
}

TEST_CASE("series and cap properties on random data") {
  testing::Gen gen(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(0, 6);
    const HSeries a = gen.series(n), b = gen.series(n), c = gen.series(n);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    const HSeries u = gen.unit_series(n);
    CHECK(u * series_invert(u) == HSeries::one(n));
    CHECK(series_invert(u) * u == HSeries::one(n));
    const GradedClass x = gen.graded(n);
    CHECK(cap(a * b, x) == cap(a, cap(b, x)));
    const long e = gen.integer(-4, 4);
    CHECK(series_int_pow(u, e) * series_int_pow(u, -e) == HSeries::one(n));
  }
}

TEST_CASE("dual and twist properties on random data") {
  testing::Gen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.integer(0, 6);
    const int m = gen.integer(0, n);
    const GradedClass x = gen.graded(n);
    const LineBundleOnPn l1{gen.rational()}, l2{gen.rational()};
    CHECK(dual(dual(x, m), m) == x);
    CHECK(twist(twist(x, l1, m), l2, m) == twist(x, LineBundleOnPn{l1.twist + l2.twist}, m));
    CHECK(dual(twist(x, l1, m), m) == twist(dual(x, m), LineBundleOnPn{-l1.twist}, m));
  }
}
