#include "csmcalc/scenarios.hpp"

#include <algorithm>
#include <sstream>

#include "csmcalc/error.hpp"
#include "csmcalc/fixtures.hpp"

namespace csmcalc {

using json_io::json;

const char* to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::trivial: return "trivial";
    case Provenance::derived: return "derived";
  }
  return "unknown";
}

bool ReportEntry::pass() const {
  const bool same = computed == expected;
  return relation == Relation::equal ? same : !same;
}

void ScenarioReport::expect_equal(std::string entry, ReportValue computed, ReportValue expected,
                                  Provenance source, std::string note) {
  entries.push_back({std::move(entry), std::move(computed), std::move(expected), source,
                     ReportEntry::Relation::equal, std::move(note)});
}

void ScenarioReport::expect_differs(std::string entry, ReportValue computed,
                                    ReportValue expected, Provenance source, std::string note) {
  entries.push_back({std::move(entry), std::move(computed), std::move(expected), source,
                     ReportEntry::Relation::differs, std::move(note)});
}

bool ScenarioReport::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.pass(); });
}

namespace {

json value_json(const ReportValue& v) {
  return std::visit([](const auto& x) { return json_io::to_json(x); }, v);
}

std::string coefficient_text(const Rational& c) {
  return c.is_integer() ? c.to_string() : "(" + c.to_string() + ")";
}

}  // namespace

json ScenarioReport::to_json() const {
  json rows = json::array();
  for (const ReportEntry& e : entries) {
    json row{{"name", e.name},
             {"computed", value_json(e.computed)},
             {"expected", value_json(e.expected)},
             {"relation", e.relation == ReportEntry::Relation::equal ? "equal" : "differs"},
             {"source", csmcalc::to_string(e.source)},
             {"status", e.pass() ? "pass" : "fail"}};
    if (!e.note.empty()) row["note"] = e.note;
    rows.push_back(std::move(row));
  }
  return json{{"scenario", name},
              {"inputs", inputs},
              {"entries", rows},
              {"status", passed() ? "pass" : "fail"}};
}

std::string ScenarioReport::to_table() const {
  std::size_t width = 4;
  for (const ReportEntry& e : entries) width = std::max(width, e.name.size());
  std::ostringstream os;
  os << "scenario " << name << ": " << (passed() ? "pass" : "FAIL") << "\n";
  for (const ReportEntry& e : entries) {
    os << (e.pass() ? "  pass  " : "  FAIL  ") << e.name
       << std::string(width - e.name.size() + 2, ' ') << format_value(e.computed)
       << (e.relation == ReportEntry::Relation::equal ? "   expected " : "   must differ from ")
       << format_value(e.expected) << "  [" << csmcalc::to_string(e.source) << "]";
    if (!e.note.empty()) os << "  (" << e.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string format_class(const GradedClass& a) {
  std::ostringstream os;
  bool first = true;
  for (int p = a.ambient_dim(); p >= 0; --p) {
    const Rational& c = a.dim(p);
    if (c.is_zero()) continue;
    if (first) {
      os << (c.sign() < 0 ? "-" : "");
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << coefficient_text(c.sign() < 0 ? -c : c) << "[P^" << p << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_value(const ReportValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  return format_class(std::get<GradedClass>(v));
}

std::array<Rational, 3> quadratic_through(
    const std::array<std::pair<Rational, Rational>, 3>& pts) {
  // Newton divided differences, then expand into the monomial basis.
  const auto& [x0, y0] = pts[0];
  const auto& [x1, y1] = pts[1];
  const auto& [x2, y2] = pts[2];
  if (x0 == x1 || x0 == x2 || x1 == x2)
    throw Error(ErrorKind::validation, "interpolation nodes must be distinct");
  const Rational f01 = (y1 - y0) / (x1 - x0);
  const Rational f12 = (y2 - y1) / (x2 - x1);
  const Rational f012 = (f12 - f01) / (x2 - x0);
  // y0 + f01 (x - x0) + f012 (x - x0)(x - x1)
  return {y0 - f01 * x0 + f012 * x0 * x1, f01 - f012 * (x0 + x1), f012};
}

Rational smooth_hypersurface_euler_characteristic(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::validation, "need n >= 1 and d >= 1");
  return (Rational(1 - d).pow(n + 1) - Rational(1)) / Rational(d) + Rational(n + 1);
}

HypersurfaceSpec smooth_hypersurface_spec(int n, const Rational& d) {
  HypersurfaceSpec spec;
  spec.n = n;
  spec.r = n - 1;
  spec.d = d;
  for (int k = 0; k <= n - 1; ++k)
    spec.polar.push_back(GradedClass::linear_space(n, n - 1 - k, d * (d - Rational(1)).pow(k)));
  return spec;
}

ScenarioReport example_tangent_developable() {
  const json spec_json = json_io::parse_text(std::string(*fixture("example41_spec.json")));
  const HypersurfaceSpec spec = json_io::spec_from_json(spec_json);
  const GradedClass c_y =
      json_io::graded_class_from_json(json_io::parse_text(std::string(*fixture("example41_cy.json"))));
  const int n = spec.n;
  const auto cls = [n](std::initializer_list<Rational> t) { return GradedClass::from_terms(n, t); };

  ScenarioReport rep;
  rep.name = "tangent-developable";
  rep.inputs = json{{"spec", spec_json}, {"c_Y", json_io::to_json(c_y)}};

  const GradedClass polar = total_polar_class(spec);
  rep.expect_equal("total_polar", polar, cls({0, 4, -7, 10}), Provenance::published,
                   "last term read as 10[P^0]");

  const GradedClass c_ma = mather_from_polar(spec);
  rep.expect_equal("c_mather", c_ma, cls({0, 4, 9, 6}), Provenance::derived);
  rep.expect_equal("c_mather (double sum)", mather_piene_double_sum(spec), c_ma,
                   Provenance::derived);

  const GradedClass c_f = fulton_class(n, spec.d);
  rep.expect_equal("c_fulton", c_f, cls({0, 4, 0, 24}), Provenance::derived);

  const GradedClass lhs = prop7_lhs(c_ma, c_f, spec.d);
  rep.expect_equal("prop7_lhs", lhs, cls({0, 0, 9, 18}), Provenance::published);

  const InvariantData inv = solve_invariants(lhs, c_y, spec.d);
  rep.expect_equal("Eu", inv.eu(), Rational(2), Provenance::published);
  rep.expect_equal("chi", inv.chi(), Rational(-1), Provenance::published);
  rep.expect_equal("rho", inv.rho(), Rational(1, 3), Provenance::published);

  const Multiplicities mult = lemma3_multiplicities(inv.chi(), inv.eu(), spec.r, 1);
  rep.expect_equal("multiplicity m", mult.m, Rational(2), Provenance::derived);
  rep.expect_equal("multiplicity n", mult.n, Rational(3), Provenance::derived);

  const GradedClass csm_expected = cls({0, 4, 6, 4});
  rep.expect_equal("c_sm (interpolation)", csm_theorem_main(c_f, c_ma, spec.d, inv),
                   csm_expected, Provenance::published);
  rep.expect_equal("c_sm (polar formula)", csm_corollary_polar(spec, inv), csm_expected,
                   Provenance::published);

  const BundleData normal{1, HSeries::linear(n, 1, spec.d)};
  const GradedClass s_yx = segre_sing_theorem5b(spec, normal, spec.d);
  rep.expect_equal("s_YX", s_yx, cls({0, 0, 9, -18}), Provenance::derived);
  rep.expect_equal("c_mather (Segre route)", mather_from_segre(s_yx, n, spec.d), c_ma,
                   Provenance::derived);
  const GradedClass s_ym = segre_YM_from_YX(s_yx, spec.d, inv);
  rep.expect_equal("s_YM", s_ym, cls({0, 0, 6, -28}), Provenance::derived);
  rep.expect_equal("c_sm (Segre route)", csm_from_segre(s_ym, n, spec.d), csm_expected,
                   Provenance::derived);
  return rep;
}

ScenarioReport example_cone_over_nodal_curve(int d) {
  if (d < 3) throw Error(ErrorKind::validation, "cone over a nodal curve needs degree d >= 3");
  constexpr int n = 3;
  const Rational dd(d);
  HypersurfaceSpec spec;
  spec.n = n;
  spec.r = 2;
  spec.d = dd;
  spec.polar = {GradedClass::linear_space(n, 2, dd),
                GradedClass::linear_space(n, 1, dd * dd - dd - Rational(2)),
                GradedClass(n)};

  ScenarioReport rep;
  rep.name = "cone-nodal-curve";
  rep.inputs = json{{"d", d}, {"spec", json_io::to_json(spec)}};

  const GradedClass c_f = fulton_class(n, dd);
  const GradedClass c_ma = mather_from_polar(spec);
  rep.expect_equal("c_mather (double sum)", mather_piene_double_sum(spec), c_ma,
                   Provenance::derived);

  // Published coefficient polynomials in alpha, lowest degree first.
  const std::array<std::array<Rational, 3>, 4> published = {{
      {0, 0, 0},
      {dd, 0, 0},
      {Rational(2) + Rational(4) * dd - dd * dd, Rational(-2), 0},
      {Rational(4) + Rational(5) * dd - Rational(2) * dd * dd,
       Rational(-4) - dd - Rational(2) * dd * dd + dd * dd * dd, Rational(2) * dd},
  }};
  const auto published_at = [&](const Rational& alpha) {
    GradedClass out(n);
    for (int k = 0; k <= n; ++k)
      out.codim(k) = published[k][0] + published[k][1] * alpha + published[k][2] * alpha * alpha;
    return out;
  };

  for (const Rational& alpha : {Rational(0), Rational(1), Rational(1, 2), Rational(1, 3),
                                Rational(2), Rational(-3, 7)}) {
    rep.expect_equal("c_alpha at alpha=" + alpha.to_string(),
                     interpolated_class(c_f, c_ma, dd, alpha), published_at(alpha),
                     Provenance::published);
  }

  // Reconstruct each coefficient as a quadratic in alpha from three nodes.
  const std::array<Rational, 3> nodes = {Rational(0), Rational(1), Rational(1, 2)};
  std::array<GradedClass, 3> samples = {interpolated_class(c_f, c_ma, dd, nodes[0]),
                                        interpolated_class(c_f, c_ma, dd, nodes[1]),
                                        interpolated_class(c_f, c_ma, dd, nodes[2])};
  std::array<std::array<Rational, 3>, 4> fitted;
  for (int k = 0; k <= n; ++k) {
    fitted[k] = quadratic_through({{{nodes[0], samples[0].codim(k)},
                                    {nodes[1], samples[1].codim(k)},
                                    {nodes[2], samples[2].codim(k)}}});
    for (int j = 0; j < 3; ++j)
      rep.expect_equal("[P^" + std::to_string(n - k) + "] alpha^" + std::to_string(j) +
                           " coefficient",
                       fitted[k][j], published[k][j], Provenance::published);
  }
  const Rational probe(5, 3);
  GradedClass reconstructed(n);
  for (int k = 0; k <= n; ++k)
    reconstructed.codim(k) =
        fitted[k][0] + fitted[k][1] * probe + fitted[k][2] * probe * probe;
  rep.expect_equal("reconstruction at alpha=5/3", reconstructed,
                   interpolated_class(c_f, c_ma, dd, probe), Provenance::derived);

  const GradedClass csm = GradedClass::from_terms(
      n, {0, dd, Rational(1) + Rational(4) * dd - dd * dd, Rational(2) + Rational(3) * dd - dd * dd});

  // The [P^1] coefficient is linear in alpha; it pins down the only candidate.
  if (!fitted[2][2].is_zero() || fitted[2][1].is_zero())
    throw Error(ErrorKind::validation, "codimension-2 coefficient is not a nonconstant line");
  const Rational candidate = (csm.codim(2) - fitted[2][0]) / fitted[2][1];
  rep.expect_equal("alpha matching [P^1]", candidate, Rational(1, 2), Provenance::published);
  const GradedClass at_candidate = interpolated_class(c_f, c_ma, dd, candidate);
  rep.expect_equal("[P^2] at alpha=1/2", at_candidate.codim(1), csm.codim(1),
                   Provenance::published);
  rep.expect_equal("[P^1] at alpha=1/2", at_candidate.codim(2), csm.codim(2),
                   Provenance::published);
  rep.expect_differs("[P^0] at alpha=1/2", at_candidate.codim(3), csm.codim(3),
                     Provenance::published, "no alpha gives the Schwartz-MacPherson class");

  const InvariantData generic(0, 2);
  rep.expect_equal("interpolation at generic-point rho", csm_theorem_main(c_f, c_ma, dd, generic),
                   at_candidate, Provenance::trivial);
  return rep;
}

ScenarioReport smooth_hypersurface_sanity(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::validation, "need n >= 1 and d >= 1");
  const Rational dd(d);
  const HypersurfaceSpec spec = smooth_hypersurface_spec(n, dd);

  ScenarioReport rep;
  rep.name = "smooth-hypersurface";
  rep.inputs = json{{"n", n}, {"d", d}, {"spec", json_io::to_json(spec)}};

  const GradedClass c_f = fulton_class(n, dd);
  const GradedClass zero(n);
  rep.expect_equal("c_mather (polar)", mather_from_polar(spec), c_f, Provenance::derived);
  rep.expect_equal("c_mather (double sum)", mather_piene_double_sum(spec), c_f,
                   Provenance::derived);
  rep.expect_equal("c_mather (Segre route)", mather_from_segre(zero, n, dd), c_f,
                   Provenance::trivial);
  rep.expect_equal("c_sm (Segre route)", csm_from_segre(zero, n, dd), c_f, Provenance::trivial);
  const InvariantData any(0, 2);
  rep.expect_equal("c_sm (polar formula)", csm_corollary_polar(spec, any), c_f,
                   Provenance::derived);
  rep.expect_equal("s_YX", segre_sing_theorem5b(spec, {1, HSeries::linear(n, 1, dd)}, dd), zero,
                   Provenance::derived);
  rep.expect_equal("Euler characteristic", c_f.dim(0),
                   smooth_hypersurface_euler_characteristic(n, d), Provenance::derived);
  return rep;
}

std::vector<std::string> scenario_names() {
  return {"tangent-developable", "cone-nodal-curve", "smooth-hypersurface"};
}

ScenarioReport run_scenario(const std::string& name, const std::map<std::string, int>& params) {
  const auto check_params = [&](std::initializer_list<std::string> allowed) {
    for (const auto& [key, value] : params)
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw Error(ErrorKind::validation,
                    "scenario '" + name + "' takes no parameter '" + key + "'");
  };
  const auto get = [&](const std::string& key, int fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (name == "tangent-developable") {
    check_params({});
    return example_tangent_developable();
  }
  if (name == "cone-nodal-curve") {
    check_params({"d"});
    return example_cone_over_nodal_curve(get("d", 3));
  }
  if (name == "smooth-hypersurface") {
    check_params({"n", "d"});
    return smooth_hypersurface_sanity(get("n", 3), get("d", 4));
  }
  throw Error(ErrorKind::validation, "unknown scenario '" + name + "'");
}

}  // namespace csmcalc
