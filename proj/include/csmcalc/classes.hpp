#ifndef CSMCALC_CLASSES_HPP
#define CSMCALC_CLASSES_HPP

// Characteristic classes of hypersurfaces whose singular locus is smooth and
// along which the Milnor-fiber Euler characteristic and the local Euler
// obstruction are constant. All classes are pushed forward to P^n.

#include <optional>
#include <vector>

#include "csmcalc/chow.hpp"

namespace csmcalc {

/// A subvariety X of P^n of dimension r together with its polar classes.
/// The divisor X acts on classes as multiplication by d*H.
struct HypersurfaceSpec {
  int n = 0;
  int r = 0;
  Rational d;
  /// polar[k] is [P_k], pure of dimension r-k. Missing trailing entries are
  /// zero. polar[0] is the fundamental class [X].
  std::vector<GradedClass> polar;
  /// c(TM) restricted to X, in powers of H. Defaults to c(TP^n).
  std::optional<HSeries> ambient_tangent;

  /// Throws Error(validation) on malformed data.
  void validate() const;

  const GradedClass& fundamental_class() const;
  /// [P_k], or zero when k is beyond the supplied entries.
  GradedClass polar_class(int k) const;
  HSeries ambient_tangent_or_default() const;
};

/// Milnor-fiber Euler characteristic and Euler obstruction along the
/// singular locus, with the derived interpolation weights.
class InvariantData {
 public:
  /// Throws Error(degenerate_invariants) if chi == 1 or chi == eu.
  InvariantData(const Rational& chi, const Rational& eu);

  const Rational& chi() const { return chi_; }
  const Rational& eu() const { return eu_; }
  /// (1-Eu)/(chi-Eu)
  const Rational& rho() const { return rho_; }
  /// (chi-1)/(chi-Eu) = 1 - rho
  const Rational& sigma() const { return sigma_; }

  friend bool operator==(const InvariantData&, const InvariantData&) = default;

 private:
  Rational chi_;
  Rational eu_;
  Rational rho_;
  Rational sigma_;
};

/// Vector bundle on X recorded by rank and total Chern class.
struct BundleData {
  int rank = 0;
  HSeries total_chern;

  /// Throws Error(validation) on negative rank or c_0 != 1.
  void validate() const;
};

struct Multiplicities {
  Rational m;  // multiplicity of the exceptional divisor
  Rational n;  // multiplicity of the exceptional divisor in the total transform of X
};

/// c(TP^n) cap [X]/(1+X) for X a degree-d hypersurface of P^n.
GradedClass fulton_class(int n, const Rational& d);

/// (-1)^{n-r} sum_k [P_k]^dual (x) O(1), relative to P^n.
GradedClass total_polar_class(const HypersurfaceSpec& spec);

/// c(TP^n) cap [P].
GradedClass mather_from_polar(const HypersurfaceSpec& spec);

/// Direct double sum over H^i . [P_{k-i}] with binomial weights; an
/// independent route to the same class as mather_from_polar.
GradedClass mather_piene_double_sum(const HypersurfaceSpec& spec);

InvariantData rho_sigma(const Rational& chi, const Rational& eu);

/// cF + (1-alpha)/(1+alpha*X) cap (cMa - cF). Returns cMa at alpha=0 and cF at
/// alpha=1.
GradedClass interpolated_class(const GradedClass& c_fulton, const GradedClass& c_mather,
                               const Rational& d, const Rational& alpha);

/// The interpolated class at alpha = rho.
GradedClass csm_theorem_main(const GradedClass& c_fulton, const GradedClass& c_mather,
                             const Rational& d, const InvariantData& inv);

/// c(TM) cap rho[X]/(1+rho X) + c(TP^n) cap sigma[P]/(1+rho X).
GradedClass csm_corollary_polar(const HypersurfaceSpec& spec, const InvariantData& inv);

/// Signed multiplicities along the singular locus. Requires dim_x > dim_y >= 0.
Multiplicities lemma3_multiplicities(const Rational& chi, const Rational& eu,
                                     int dim_x, int dim_y);

/// s(Y,X) = (1/sigma + X) cap s(Y,M).
GradedClass segre_YX_from_YM(const GradedClass& s_ym, const Rational& d,
                             const InvariantData& inv);

/// s(Y,M) = sigma/(1+sigma X) cap s(Y,X); inverse of segre_YX_from_YM.
GradedClass segre_YM_from_YX(const GradedClass& s_yx, const Rational& d,
                             const InvariantData& inv);

/// c(TP^n) cap ([X]/(1+X) + s(Y,X)^dual (x) L), X of degree d in P^n.
GradedClass mather_from_segre(const GradedClass& s_yx, int n, const Rational& d);

/// c(TP^n) cap ([X]/(1+X) + (c(L) cap s(Y,M))^dual (x) L).
GradedClass csm_from_segre(const GradedClass& s_ym, int n, const Rational& d);

/// c(E (x) L) by the splitting principle, mod H^{n+1}.
HSeries twisted_chern(const BundleData& bundle, const LineBundleOnPn& l, int n);

/// c(E*): c_k -> (-1)^k c_k.
HSeries dual_bundle_chern(const BundleData& bundle, int n);

/// Segre class of the singularity subscheme in X from the polar data:
///   [X] + c(N* (x) L)/c(L)^{n-r-1} cap ([P]^dual (x)_M L),
/// with normal the normal bundle of X in P^n (rank n-r), L = O_M(X)|_X of
/// class d*H, and the dual/twist taken relative to dim M = r+1.
GradedClass segre_sing_theorem5b(const HypersurfaceSpec& spec, const BundleData& normal,
                                 const Rational& d);

/// (1+X) cap (cMa - cF).
GradedClass prop7_lhs(const GradedClass& c_mather, const GradedClass& c_fulton,
                      const Rational& d);

/// Recovers (Eu, chi) from lhs = ((Eu-chi) + (Eu-1)X) cap c(TY')[Y'].
///
/// One linear equation per codimension in the two unknowns Eu-chi and Eu-1.
/// The system is solved exactly and every equation is then checked.
/// Throws Error(underdetermined) when the system has rank < 2,
/// Error(inconsistent) when no exact solution exists, and
/// Error(degenerate_invariants) when the solution has chi == 1 or chi == Eu.
InvariantData solve_invariants(const GradedClass& lhs, const GradedClass& c_y,
                               const Rational& d);

}  // namespace csmcalc

#endif  // CSMCALC_CLASSES_HPP
