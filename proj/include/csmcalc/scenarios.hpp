#ifndef CSMCALC_SCENARIOS_HPP
#define CSMCALC_SCENARIOS_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "csmcalc/classes.hpp"
#include "csmcalc/json_io.hpp"

namespace csmcalc {

/// Where an expected value comes from: a published worked example, an
/// identity that holds by construction, or an independent derivation.
enum class Provenance { published, trivial, derived };

const char* to_string(Provenance p) noexcept;

using ReportValue = std::variant<Rational, GradedClass>;

struct ReportEntry {
  enum class Relation { equal, differs };

  std::string name;
  ReportValue computed;
  ReportValue expected;
  Provenance source;
  Relation relation = Relation::equal;
  std::string note;

  bool pass() const;
};

struct ScenarioReport {
  std::string name;
  json_io::json inputs;
  std::vector<ReportEntry> entries;

  void expect_equal(std::string entry, ReportValue computed, ReportValue expected,
                    Provenance source, std::string note = {});
  void expect_differs(std::string entry, ReportValue computed, ReportValue expected,
                      Provenance source, std::string note = {});

  bool passed() const;
  json_io::json to_json() const;
  /// One row per entry: status, name, computed, expected, source.
  std::string to_table() const;
};

/// Renders a class highest dimension first, e.g. "4[P^2] - 7[P^1] + 10[P^0]".
std::string format_class(const GradedClass& a);
std::string format_value(const ReportValue& v);

/// Degree-4 tangent developable of the twisted cubic in P^3.
ScenarioReport example_tangent_developable();

/// Cone in P^3 over a plane curve of degree d >= 3 with one node. The
/// singular invariants jump at the vertex, so the interpolated class matches
/// the Schwartz-MacPherson class only up to codimension one.
ScenarioReport example_cone_over_nodal_curve(int d);

/// Smooth degree-d hypersurface of P^n: Fulton, Mather and Schwartz-MacPherson
/// classes agree and the point coefficient is the topological Euler
/// characteristic.
ScenarioReport smooth_hypersurface_sanity(int n, int d);

/// Closed form ((1-d)^{n+1} - 1)/d + n + 1 for the Euler characteristic of a
/// smooth degree-d hypersurface of P^n. Exposed for tests.
Rational smooth_hypersurface_euler_characteristic(int n, int d);

/// Polar classes d(d-1)^k [P^{n-1-k}] of a smooth degree-d hypersurface.
HypersurfaceSpec smooth_hypersurface_spec(int n, const Rational& d);

/// Coefficients c0, c1, c2 of the unique polynomial of degree <= 2 through
/// three points with distinct abscissae.
std::array<Rational, 3> quadratic_through(const std::array<std::pair<Rational, Rational>, 3>& pts);

std::vector<std::string> scenario_names();

/// Dispatches by name with integer parameters ("d", "n"). Throws
/// Error(validation) for unknown names or parameters.
ScenarioReport run_scenario(const std::string& name, const std::map<std::string, int>& params);

}  // namespace csmcalc

#endif  // CSMCALC_SCENARIOS_HPP
