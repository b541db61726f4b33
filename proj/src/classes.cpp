#include "csmcalc/classes.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "csmcalc/error.hpp"

namespace csmcalc {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::validation, what);
}

void check_same_dim(const GradedClass& a, const GradedClass& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::dimension_mismatch,
                "classes live on P^" + std::to_string(a.ambient_dim()) + " and P^" +
                    std::to_string(b.ambient_dim()));
}

/// [X]/(1+X) for X = d[P^{n-1}].
GradedClass divisor_segre(int n, const Rational& d) {
  const GradedClass x = GradedClass::linear_space(n, n - 1, d);
  return cap(series_invert(HSeries::linear(n, 1, d)), x);
}

}  // namespace

// HypersurfaceSpec

void HypersurfaceSpec::validate() const {
  if (n < 1) invalid("ambient dimension n must be at least 1");
  if (r < 0 || r > n) invalid("dimension r must satisfy 0 <= r <= n");
  if (polar.empty()) invalid("polar class [P_0] = [X] is required");
  if (polar.size() > static_cast<std::size_t>(r) + 1)
    invalid("polar classes supplied beyond k = r = " + std::to_string(r));
  for (std::size_t k = 0; k < polar.size(); ++k) {
    if (polar[k].ambient_dim() != n)
      throw Error(ErrorKind::dimension_mismatch,
                  "[P_" + std::to_string(k) + "] is not a class on P^" + std::to_string(n));
    const int expected = r - static_cast<int>(k);
    if (!polar[k].is_pure_of_dimension(expected))
      invalid("[P_" + std::to_string(k) + "] must be supported in dimension " +
              std::to_string(expected));
  }
  if (ambient_tangent) {
    if (ambient_tangent->ambient_dim() != n)
      throw Error(ErrorKind::dimension_mismatch, "ambient_tangent is not a series on P^n");
    if ((*ambient_tangent)[0] != Rational(1))
      invalid("ambient_tangent must have constant term 1");
  }
}

const GradedClass& HypersurfaceSpec::fundamental_class() const {
  if (polar.empty()) invalid("polar class [P_0] = [X] is required");
  return polar.front();
}

GradedClass HypersurfaceSpec::polar_class(int k) const {
  if (k < 0 || k >= static_cast<int>(polar.size())) return GradedClass(n);
  return polar[k];
}

HSeries HypersurfaceSpec::ambient_tangent_or_default() const {
  return ambient_tangent ? *ambient_tangent : tangent_chern_pn(n);
}

// InvariantData

InvariantData::InvariantData(const Rational& chi, const Rational& eu) : chi_(chi), eu_(eu) {
  if (chi == Rational(1))
    throw Error(ErrorKind::degenerate_invariants,
                "degenerate invariants: chi = 1 cannot occur on a nice hypersurface");
  if (chi == eu)
    throw Error(ErrorKind::degenerate_invariants,
                "degenerate invariants: chi = Eu cannot occur on a nice hypersurface");
  rho_ = (Rational(1) - eu) / (chi - eu);
  sigma_ = (chi - Rational(1)) / (chi - eu);
}

void BundleData::validate() const {
  if (rank < 0) invalid("bundle rank must be non-negative");
  if (total_chern[0] != Rational(1)) invalid("total Chern class must have constant term 1");
  for (int k = rank + 1; k <= total_chern.ambient_dim(); ++k)
    if (!total_chern[k].is_zero())
      invalid("c_" + std::to_string(k) + " of a rank " + std::to_string(rank) +
              " bundle must vanish");
}

// Operations

GradedClass fulton_class(int n, const Rational& d) {
  if (n < 1) invalid("fulton_class requires n >= 1");
  return cap(tangent_chern_pn(n), divisor_segre(n, d));
}

GradedClass total_polar_class(const HypersurfaceSpec& spec) {
  spec.validate();
  const int n = spec.n;
  GradedClass sum(n);
  const LineBundleOnPn o1{1};
  for (std::size_t k = 0; k < spec.polar.size(); ++k)
    sum += twist(dual(spec.polar[k], n), o1, n);
  return (n - spec.r) % 2 == 0 ? sum : -sum;
}

GradedClass mather_from_polar(const HypersurfaceSpec& spec) {
  return cap(tangent_chern_pn(spec.n), total_polar_class(spec));
}

GradedClass mather_piene_double_sum(const HypersurfaceSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int r = spec.r;
  GradedClass out(n);
  // H^i . [P_j] shifts codimension by i, so only k = i + j <= r + n matters.
  for (int k = 0; k <= r + n; ++k) {
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      if (j > r || j >= static_cast<int>(spec.polar.size())) continue;
      const Rational weight = ((k - i) % 2 == 0 ? Rational(1) : Rational(-1)) *
                              binomial(r + 1 - k + i, i);
      const GradedClass& pj = spec.polar[j];
      for (int c = 0; c + i <= n; ++c)
        if (!pj.codim(c).is_zero()) out.codim(c + i) += weight * pj.codim(c);
    }
  }
  return out;
}

InvariantData rho_sigma(const Rational& chi, const Rational& eu) {
  return InvariantData(chi, eu);
}

GradedClass interpolated_class(const GradedClass& c_fulton, const GradedClass& c_mather,
                               const Rational& d, const Rational& alpha) {
  check_same_dim(c_fulton, c_mather);
  const int n = c_fulton.ambient_dim();
  const HSeries weight =
      series_invert(HSeries::linear(n, 1, alpha * d)) * (Rational(1) - alpha);
  return c_fulton + cap(weight, c_mather - c_fulton);
}

GradedClass csm_theorem_main(const GradedClass& c_fulton, const GradedClass& c_mather,
                             const Rational& d, const InvariantData& inv) {
  return interpolated_class(c_fulton, c_mather, d, inv.rho());
}

GradedClass csm_corollary_polar(const HypersurfaceSpec& spec, const InvariantData& inv) {
  spec.validate();
  const int n = spec.n;
  const HSeries damping = series_invert(HSeries::linear(n, 1, inv.rho() * spec.d));
  const GradedClass virtual_part =
      cap(spec.ambient_tangent_or_default() * damping, inv.rho() * spec.fundamental_class());
  const GradedClass milnor_part =
      cap(tangent_chern_pn(n) * damping, inv.sigma() * total_polar_class(spec));
  return virtual_part + milnor_part;
}

Multiplicities lemma3_multiplicities(const Rational& chi, const Rational& eu, int dim_x,
                                     int dim_y) {
  if (dim_y < 0 || dim_x <= dim_y) invalid("multiplicities require dim X > dim Y >= 0");
  const Rational sign = (dim_x - dim_y) % 2 == 0 ? Rational(1) : Rational(-1);
  return {sign * (chi - Rational(1)), sign * (chi - eu)};
}

GradedClass segre_YX_from_YM(const GradedClass& s_ym, const Rational& d,
                             const InvariantData& inv) {
  const int n = s_ym.ambient_dim();
  return cap(HSeries::linear(n, Rational(1) / inv.sigma(), d), s_ym);
}

GradedClass segre_YM_from_YX(const GradedClass& s_yx, const Rational& d,
                             const InvariantData& inv) {
  const int n = s_yx.ambient_dim();
  const HSeries s = series_invert(HSeries::linear(n, 1, inv.sigma() * d)) * inv.sigma();
  return cap(s, s_yx);
}

GradedClass mather_from_segre(const GradedClass& s_yx, int n, const Rational& d) {
  if (s_yx.ambient_dim() != n)
    throw Error(ErrorKind::dimension_mismatch, "s(Y,X) is not a class on P^n");
  const GradedClass inner = divisor_segre(n, d) + twist(dual(s_yx, n), LineBundleOnPn{d}, n);
  return cap(tangent_chern_pn(n), inner);
}

GradedClass csm_from_segre(const GradedClass& s_ym, int n, const Rational& d) {
  if (s_ym.ambient_dim() != n)
    throw Error(ErrorKind::dimension_mismatch, "s(Y,M) is not a class on P^n");
  const LineBundleOnPn l{d};
  const GradedClass inner =
      divisor_segre(n, d) + twist(dual(cap(l.total_chern(n), s_ym), n), l, n);
  return cap(tangent_chern_pn(n), inner);
}

HSeries twisted_chern(const BundleData& bundle, const LineBundleOnPn& l, int n) {
  bundle.validate();
  if (bundle.total_chern.ambient_dim() != n)
    throw Error(ErrorKind::dimension_mismatch, "bundle Chern class is not a series on P^n");
  const int e = bundle.rank;
  HSeries out(n);
  for (int k = 0; k <= n; ++k) {
    Rational ck;
    for (int i = 0; i <= std::min(k, e); ++i)
      ck += binomial(e - i, k - i) * bundle.total_chern[i] * l.twist.pow(k - i);
    out[k] = ck;
  }
  return out;
}

HSeries dual_bundle_chern(const BundleData& bundle, int n) {
  if (bundle.total_chern.ambient_dim() != n)
    throw Error(ErrorKind::dimension_mismatch, "bundle Chern class is not a series on P^n");
  HSeries out = bundle.total_chern;
  for (int k = 1; k <= n; k += 2) out[k] = -out[k];
  return out;
}

GradedClass segre_sing_theorem5b(const HypersurfaceSpec& spec, const BundleData& normal,
                                 const Rational& d) {
  spec.validate();
  normal.validate();
  const int n = spec.n;
  if (normal.rank != n - spec.r)
    invalid("normal bundle of X in P^n must have rank n - r = " + std::to_string(n - spec.r));
  const int dim_m = spec.r + 1;
  const LineBundleOnPn l{d};
  const BundleData conormal{normal.rank, dual_bundle_chern(normal, n)};
  const HSeries factor = twisted_chern(conormal, l, n) *
                         series_int_pow(l.total_chern(n), -(n - spec.r - 1));
  const GradedClass p = total_polar_class(spec);
  return spec.fundamental_class() + cap(factor, twist(dual(p, dim_m), l, dim_m));
}

GradedClass prop7_lhs(const GradedClass& c_mather, const GradedClass& c_fulton,
                      const Rational& d) {
  check_same_dim(c_mather, c_fulton);
  return cap(HSeries::linear(c_mather.ambient_dim(), 1, d), c_mather - c_fulton);
}

InvariantData solve_invariants(const GradedClass& lhs, const GradedClass& c_y,
                               const Rational& d) {
  check_same_dim(lhs, c_y);
  const int n = lhs.ambient_dim();
  // Row k: lhs_k = a * cY_k + b * d * cY_{k-1}, with a = Eu - chi, b = Eu - 1.
  struct Row {
    Rational u, v, w;
  };
  std::vector<Row> rows;
  rows.reserve(n + 1);
  for (int k = 0; k <= n; ++k)
    rows.push_back({c_y.codim(k), k > 0 ? d * c_y.codim(k - 1) : Rational(0), lhs.codim(k)});

  std::optional<std::array<Rational, 2>> solution;
  for (std::size_t i = 0; i < rows.size() && !solution; ++i) {
    for (std::size_t j = i + 1; j < rows.size() && !solution; ++j) {
      const Rational det = rows[i].u * rows[j].v - rows[j].u * rows[i].v;
      if (det.is_zero()) continue;
      solution = std::array<Rational, 2>{
          (rows[i].w * rows[j].v - rows[j].w * rows[i].v) / det,
          (rows[i].u * rows[j].w - rows[j].u * rows[i].w) / det};
    }
  }
  if (!solution)
    throw Error(ErrorKind::underdetermined,
                "underdetermined system: need X . dim Y' != 0 (rank < 2)");
  const auto& [a, b] = *solution;
  for (int k = 0; k <= n; ++k) {
    const Row& row = rows[k];
    if (row.u * a + row.v * b != row.w)
      throw Error(ErrorKind::inconsistent,
                  "inconsistent system: codimension " + std::to_string(k) +
                      " equation fails, data is not that of a nice hypersurface");
  }
  const Rational eu = b + Rational(1);
  return InvariantData(eu - a, eu);
}

}  // namespace csmcalc
