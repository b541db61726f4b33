#include "csmcalc/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "csmcalc/classes.hpp"
#include "csmcalc/json_io.hpp"
#include "csmcalc/scenarios.hpp"

namespace csmcalc::cli {

using json_io::json;

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return parse_error;
    case ErrorKind::validation:
    case ErrorKind::dimension_mismatch:
    case ErrorKind::non_unit: return validation_error;
    case ErrorKind::degenerate_invariants: return degenerate_error;
    case ErrorKind::inconsistent: return inconsistent_error;
    case ErrorKind::underdetermined: return underdetermined_error;
  }
  return validation_error;
}

namespace {

const char* const kResultKeys[] = {"c_fulton", "c_mather", "c_sm", "c_alpha", "s_YX",
                                   "s_YM",     "total_polar", "prop7_lhs"};

/// Collected output of one command: JSON document plus table rows.
struct Result {
  json doc;
  std::vector<std::pair<std::string, std::string>> rows;

  void add(const std::string& key, const GradedClass& a) {
    doc[key] = json_io::to_json(a);
    rows.emplace_back(key, format_class(a));
  }
  void add(const std::string& key, const InvariantData& inv) {
    doc[key] = json_io::to_json(inv);
    rows.emplace_back(key, "chi=" + inv.chi().to_string() + " Eu=" + inv.eu().to_string() +
                               " rho=" + inv.rho().to_string() +
                               " sigma=" + inv.sigma().to_string());
  }
  void add(const std::string& key, const Rational& r) {
    doc[key] = json_io::to_json(r);
    rows.emplace_back(key, r.to_string());
  }
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  /// "-" reads standard input, text starting with '{' is inline JSON, and
  /// anything else is a file path with an optional "#key" selector.
  json load(const std::string& source, std::string* selector = nullptr) {
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && source[first] == '{') return json_io::parse_text(source);
    if (source == "-") {
      if (stdin_used_) throw Error(ErrorKind::parse, "standard input used by two options");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return json_io::parse_text(ss.str());
    }
    std::string path = source;
    if (const auto hash = source.rfind('#'); hash != std::string::npos) {
      path = source.substr(0, hash);
      if (selector) *selector = source.substr(hash + 1);
    }
    std::ifstream file(path);
    if (!file) throw Error(ErrorKind::parse, "cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return json_io::parse_text(ss.str());
  }

  /// Accepts a bare class or a previous command's JSON output.
  GradedClass graded_class(const std::string& source) {
    std::string selector;
    const json j = load(source, &selector);
    if (!selector.empty()) {
      if (!j.is_object() || !j.contains(selector))
        throw Error(ErrorKind::parse, "no key '" + selector + "' in " + source);
      return json_io::graded_class_from_json(j.at(selector));
    }
    if (!j.is_object() || j.contains("ambient_dim")) return json_io::graded_class_from_json(j);
    std::vector<std::string> found;
    for (const char* key : kResultKeys)
      if (j.contains(key)) found.emplace_back(key);
    if (found.size() != 1)
      throw Error(ErrorKind::parse, "cannot pick a class from " + source +
                                        "; append #key to select one result");
    return json_io::graded_class_from_json(j.at(found.front()));
  }

  HypersurfaceSpec spec(const std::string& source) { return json_io::spec_from_json(load(source)); }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorKind::parse, std::string("--") + name + ": malformed rational '" + text + "'");
  }
}

void emit(const Result& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << result.doc.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, text] : result.rows) width = std::max(width, key.size());
  for (const auto& [key, text] : result.rows)
    out << key << std::string(width - key.size() + 2, ' ') << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Exact characteristic classes of singular hypersurfaces in projective space",
               "csmcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output mode")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();

  std::string spec_src, cf_src, cma_src, syx_src, class_src, lhs_src, cy_src, normal_src,
      inv_src;
  std::string d_text, alpha_text, chi_text, eu_text, route = "polar", to = "ym", scenario;
  std::vector<std::string> scenario_params;
  int n = 0, dim_x = 0, dim_y = 0;

  Inputs inputs(in);
  Result result;
  std::function<int()> action;

  const auto invariants = [&]() {
    if (!inv_src.empty()) {
      if (!chi_text.empty() || !eu_text.empty())
        throw Error(ErrorKind::parse, "give either --invariants or --chi/--eu, not both");
      return json_io::invariants_from_json(inputs.load(inv_src));
    }
    if (chi_text.empty() || eu_text.empty())
      throw Error(ErrorKind::parse, "--chi and --eu are required");
    return rho_sigma(rational_arg(chi_text, "chi"), rational_arg(eu_text, "eu"));
  };
  // Either --spec, or --cf/--cma/--d.
  const auto endpoint_classes = [&]() {
    if (!spec_src.empty()) {
      if (!cf_src.empty() || !cma_src.empty())
        throw Error(ErrorKind::parse, "give either --spec or --cf/--cma, not both");
      const HypersurfaceSpec spec = inputs.spec(spec_src);
      result.doc["inputs"]["spec"] = json_io::to_json(spec);
      return std::tuple{fulton_class(spec.n, spec.d), mather_from_polar(spec), spec.d};
    }
    if (cf_src.empty() || cma_src.empty() || d_text.empty())
      throw Error(ErrorKind::parse, "need --spec, or all of --cf, --cma and --d");
    GradedClass cf = inputs.graded_class(cf_src);
    GradedClass cma = inputs.graded_class(cma_src);
    const Rational d = rational_arg(d_text, "d");
    result.doc["inputs"]["c_fulton"] = json_io::to_json(cf);
    result.doc["inputs"]["c_mather"] = json_io::to_json(cma);
    result.doc["inputs"]["d"] = json_io::to_json(d);
    return std::tuple{std::move(cf), std::move(cma), d};
  };

  auto* fulton = app.add_subcommand("fulton", "Fulton class of a degree-d hypersurface of P^n");
  fulton->add_option("--n", n, "Ambient dimension")->required();
  fulton->add_option("--d", d_text, "Degree")->required();
  fulton->callback([&] {
    action = [&] {
      const Rational d = rational_arg(d_text, "d");
      result.doc["inputs"] = json{{"n", n}, {"d", json_io::to_json(d)}};
      result.add("c_fulton", fulton_class(n, d));
      return ok;
    };
  });

  auto* polar = app.add_subcommand("polar-total", "Total polar class [P]");
  polar->add_option("--spec", spec_src, "Hypersurface spec (file, inline JSON or -)")->required();
  polar->callback([&] {
    action = [&] {
      const HypersurfaceSpec spec = inputs.spec(spec_src);
      result.doc["inputs"]["spec"] = json_io::to_json(spec);
      result.add("total_polar", total_polar_class(spec));
      return ok;
    };
  });

  auto* mather = app.add_subcommand("mather", "Chern-Mather class");
  mather->add_option("--spec", spec_src, "Hypersurface spec");
  mather->add_option("--route", route, "polar | double-sum (with --spec)")
      ->check(CLI::IsMember({"polar", "double-sum"}));
  mather->add_option("--syx", syx_src, "Segre class s(Y,X) (with --n and --d)");
  mather->add_option("--n", n, "Ambient dimension");
  mather->add_option("--d", d_text, "Degree");
  mather->callback([&] {
    action = [&] {
      if (!spec_src.empty() == !syx_src.empty())
        throw Error(ErrorKind::parse, "give exactly one of --spec or --syx");
      if (!spec_src.empty()) {
        const HypersurfaceSpec spec = inputs.spec(spec_src);
        result.doc["inputs"]["spec"] = json_io::to_json(spec);
        result.add("c_mather", route == "polar" ? mather_from_polar(spec)
                                                : mather_piene_double_sum(spec));
        return ok;
      }
      if (d_text.empty()) throw Error(ErrorKind::parse, "--syx needs --n and --d");
      const GradedClass syx = inputs.graded_class(syx_src);
      const Rational d = rational_arg(d_text, "d");
      result.doc["inputs"] = json{{"s_YX", json_io::to_json(syx)}, {"n", n}, {"d", json_io::to_json(d)}};
      result.add("c_mather", mather_from_segre(syx, n, d));
      return ok;
    };
  });

  auto* interpolate = app.add_subcommand("interpolate", "Interpolated class c_(alpha)");
  interpolate->add_option("--alpha", alpha_text, "Rational parameter")->required();
  interpolate->add_option("--spec", spec_src, "Hypersurface spec");
  interpolate->add_option("--cf", cf_src, "Fulton class");
  interpolate->add_option("--cma", cma_src, "Chern-Mather class");
  interpolate->add_option("--d", d_text, "Divisor multiple of H");
  interpolate->callback([&] {
    action = [&] {
      const Rational alpha = rational_arg(alpha_text, "alpha");
      const auto [cf, cma, d] = endpoint_classes();
      result.doc["inputs"]["alpha"] = json_io::to_json(alpha);
      result.add("c_alpha", interpolated_class(cf, cma, d, alpha));
      return ok;
    };
  });

  const auto add_invariant_options = [&](CLI::App* sub) {
    sub->add_option("--chi", chi_text, "Milnor fiber Euler characteristic");
    sub->add_option("--eu", eu_text, "Local Euler obstruction");
    sub->add_option("--invariants", inv_src, "Invariants JSON {\"chi\",\"eu\"}");
  };

  auto* csm = app.add_subcommand("csm", "Schwartz-MacPherson class by interpolation at rho");
  csm->add_option("--spec", spec_src, "Hypersurface spec");
  csm->add_option("--cf", cf_src, "Fulton class");
  csm->add_option("--cma", cma_src, "Chern-Mather class");
  csm->add_option("--d", d_text, "Divisor multiple of H");
  add_invariant_options(csm);
  csm->callback([&] {
    action = [&] {
      const InvariantData inv = invariants();
      const auto [cf, cma, d] = endpoint_classes();
      result.add("invariants", inv);
      result.add("c_sm", csm_theorem_main(cf, cma, d, inv));
      return ok;
    };
  });

  auto* csm_polar = app.add_subcommand("csm-polar", "Schwartz-MacPherson class from polar data");
  csm_polar->add_option("--spec", spec_src, "Hypersurface spec")->required();
  add_invariant_options(csm_polar);
  csm_polar->callback([&] {
    action = [&] {
      const InvariantData inv = invariants();
      const HypersurfaceSpec spec = inputs.spec(spec_src);
      result.doc["inputs"]["spec"] = json_io::to_json(spec);
      result.add("invariants", inv);
      result.add("total_polar", total_polar_class(spec));
      result.add("c_sm", csm_corollary_polar(spec, inv));
      return ok;
    };
  });

  auto* segre5b = app.add_subcommand("segre-5b", "Segre class s(Y,X) from polar data");
  segre5b->add_option("--spec", spec_src, "Hypersurface spec")->required();
  segre5b->add_option("--normal", normal_src,
                      "Normal bundle of X in P^n {\"rank\",\"total_chern\"}; "
                      "defaults to O(d) when r = n-1");
  segre5b->callback([&] {
    action = [&] {
      const HypersurfaceSpec spec = inputs.spec(spec_src);
      BundleData normal{1, HSeries::linear(spec.n, 1, spec.d)};
      if (!normal_src.empty()) {
        normal = json_io::bundle_from_json(inputs.load(normal_src));
      } else if (spec.r != spec.n - 1) {
        throw Error(ErrorKind::validation, "--normal is required unless r = n - 1");
      }
      result.doc["inputs"] = json{{"spec", json_io::to_json(spec)}, {"normal", json_io::to_json(normal)}};
      result.add("total_polar", total_polar_class(spec));
      result.add("s_YX", segre_sing_theorem5b(spec, normal, spec.d));
      return ok;
    };
  });

  auto* convert = app.add_subcommand("segre-convert", "Convert between s(Y,X) and s(Y,M)");
  convert->add_option("--class", class_src, "Input Segre class")->required();
  convert->add_option("--to", to, "ym: s(Y,X) -> s(Y,M); yx: s(Y,M) -> s(Y,X)")
      ->check(CLI::IsMember({"ym", "yx"}));
  convert->add_option("--d", d_text, "Divisor multiple of H")->required();
  add_invariant_options(convert);
  convert->callback([&] {
    action = [&] {
      const InvariantData inv = invariants();
      const GradedClass input = inputs.graded_class(class_src);
      const Rational d = rational_arg(d_text, "d");
      result.doc["inputs"] = json{{to == "ym" ? "s_YX" : "s_YM", json_io::to_json(input)},
                                  {"d", json_io::to_json(d)}};
      result.add("invariants", inv);
      if (to == "ym") result.add("s_YM", segre_YM_from_YX(input, d, inv));
      else result.add("s_YX", segre_YX_from_YM(input, d, inv));
      return ok;
    };
  });

  auto* solve = app.add_subcommand("solve-invariants", "Recover (Eu, chi) from global classes");
  solve->add_option("--lhs", lhs_src, "(1+X) cap (c_Ma - c_F)")->required();
  solve->add_option("--cy", cy_src, "c(TY') cap [Y'] pushed to P^n")->required();
  solve->add_option("--d", d_text, "Divisor multiple of H")->required();
  solve->callback([&] {
    action = [&] {
      const GradedClass lhs = inputs.graded_class(lhs_src);
      const GradedClass cy = inputs.graded_class(cy_src);
      const Rational d = rational_arg(d_text, "d");
      result.doc["inputs"] = json{{"lhs", json_io::to_json(lhs)}, {"c_Y", json_io::to_json(cy)},
                                  {"d", json_io::to_json(d)}};
      result.add("invariants", solve_invariants(lhs, cy, d));
      return ok;
    };
  });

  auto* mult = app.add_subcommand("multiplicities", "Multiplicities m, n along the singular locus");
  mult->add_option("--chi", chi_text)->required();
  mult->add_option("--eu", eu_text)->required();
  mult->add_option("--dim-x", dim_x)->required();
  mult->add_option("--dim-y", dim_y)->required();
  mult->callback([&] {
    action = [&] {
      const Rational chi = rational_arg(chi_text, "chi");
      const Rational eu = rational_arg(eu_text, "eu");
      result.doc["inputs"] = json{{"chi", json_io::to_json(chi)}, {"eu", json_io::to_json(eu)},
                                  {"dim_x", dim_x}, {"dim_y", dim_y}};
      const Multiplicities mn = lemma3_multiplicities(chi, eu, dim_x, dim_y);
      result.add("m", mn.m);
      result.add("n", mn.n);
      return ok;
    };
  });

  auto* scen = app.add_subcommand("run-scenario", "Run a named worked example");
  scen->add_option("name", scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  scen->add_option("--param", scenario_params, "key=value integer parameter");
  scen->callback([&] {
    action = [&] {
      std::map<std::string, int> params;
      for (const std::string& p : scenario_params) {
        const auto eq = p.find('=');
        std::size_t used = 0;
        int value = 0;
        try {
          if (eq == std::string::npos) throw std::invalid_argument(p);
          value = std::stoi(p.substr(eq + 1), &used);
        } catch (const std::exception&) {
          throw Error(ErrorKind::parse, "--param expects key=integer, got '" + p + "'");
        }
        if (used != p.size() - eq - 1)
          throw Error(ErrorKind::parse, "--param expects key=integer, got '" + p + "'");
        params[p.substr(0, eq)] = value;
      }
      const ScenarioReport rep = run_scenario(scenario, params);
      if (format == "json") out << rep.to_json().dump(2) << "\n";
      else out << rep.to_table();
      return rep.passed() ? ok : scenario_failed;
    };
  });

  std::vector<const char*> argv{"csmcalc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : parse_error;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    result.doc["command"] = command;
    const int code = action();
    if (command != "run-scenario") emit(result, format, out);
    return code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace csmcalc::cli
