#include "csmcalc/json_io.hpp"

#include <initializer_list>
#include <string>

#include "csmcalc/error.hpp"

namespace csmcalc::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, what); }

void require_object(const json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be a JSON object");
}

void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(std::string("unknown key '") + key + "' in " + what);
  }
}

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "' in " + what);
  return *it;
}

int int_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer in " + what);
  return v.get<int>();
}

std::vector<Rational> coeff_list(const json& j, int n, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_array()) bad(std::string("'") + key + "' must be an array in " + what);
  if (n < 0) bad(std::string("negative ambient_dim in ") + what);
  if (v.size() != static_cast<std::size_t>(n) + 1)
    bad(std::string("'") + key + "' has " + std::to_string(v.size()) +
        " entries but ambient_dim " + std::to_string(n) + " requires " +
        std::to_string(n + 1));
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const json& c : v) out.push_back(rational_from_json(c));
  return out;
}

json coeff_array(std::span<const Rational> coeffs) {
  json arr = json::array();
  for (const Rational& c : coeffs) arr.push_back(c.to_string());
  return arr;
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const GradedClass& a) {
  return json{{"ambient_dim", a.ambient_dim()}, {"coeffs_by_codim", coeff_array(a.coeffs())}};
}

json to_json(const HSeries& s) {
  return json{{"ambient_dim", s.ambient_dim()}, {"coeffs_by_degree", coeff_array(s.coeffs())}};
}

json to_json(const HypersurfaceSpec& spec) {
  json polar = json::object();
  for (std::size_t k = 0; k < spec.polar.size(); ++k)
    polar[std::to_string(k)] = to_json(spec.polar[k]);
  json j{{"n", spec.n}, {"r", spec.r}, {"d", to_json(spec.d)}, {"polar", polar}};
  if (spec.ambient_tangent) j["ambient_tangent"] = to_json(*spec.ambient_tangent);
  return j;
}

json to_json(const InvariantData& inv) {
  return json{{"chi", to_json(inv.chi())},
              {"eu", to_json(inv.eu())},
              {"rho", to_json(inv.rho())},
              {"sigma", to_json(inv.sigma())}};
}

json to_json(const BundleData& b) {
  return json{{"rank", b.rank}, {"total_chern", to_json(b.total_chern)}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) bad("rationals must be JSON strings of the form \"p\" or \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

GradedClass graded_class_from_json(const json& j) {
  constexpr const char* what = "graded class";
  require_object(j, what);
  only_keys(j, {"ambient_dim", "coeffs_by_codim"}, what);
  const int n = int_field(j, "ambient_dim", what);
  return GradedClass(n, coeff_list(j, n, "coeffs_by_codim", what));
}

HSeries hseries_from_json(const json& j) {
  constexpr const char* what = "H-series";
  require_object(j, what);
  only_keys(j, {"ambient_dim", "coeffs_by_degree"}, what);
  const int n = int_field(j, "ambient_dim", what);
  return HSeries(n, coeff_list(j, n, "coeffs_by_degree", what));
}

HypersurfaceSpec spec_from_json(const json& j) {
  constexpr const char* what = "hypersurface spec";
  require_object(j, what);
  only_keys(j, {"n", "r", "d", "polar", "ambient_tangent"}, what);
  HypersurfaceSpec spec;
  spec.n = int_field(j, "n", what);
  spec.r = int_field(j, "r", what);
  spec.d = rational_from_json(field(j, "d", what));
  const json& polar = field(j, "polar", what);
  require_object(polar, "polar");
  int max_k = -1;
  for (const auto& [key, value] : polar.items()) {
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || k < 0 || std::to_string(k) != key)
      bad("polar keys must be non-negative integers, got '" + key + "'");
    max_k = std::max(max_k, k);
  }
  if (max_k >= 0) {
    spec.polar.assign(static_cast<std::size_t>(max_k) + 1, GradedClass(std::max(spec.n, 0)));
    for (const auto& [key, value] : polar.items())
      spec.polar[std::stoi(key)] = graded_class_from_json(value);
  }
  if (auto it = j.find("ambient_tangent"); it != j.end())
    spec.ambient_tangent = hseries_from_json(*it);
  spec.validate();
  return spec;
}

InvariantData invariants_from_json(const json& j) {
  constexpr const char* what = "invariants";
  require_object(j, what);
  only_keys(j, {"chi", "eu"}, what);
  return InvariantData(rational_from_json(field(j, "chi", what)),
                       rational_from_json(field(j, "eu", what)));
}

BundleData bundle_from_json(const json& j) {
  constexpr const char* what = "bundle";
  require_object(j, what);
  only_keys(j, {"rank", "total_chern"}, what);
  BundleData b{int_field(j, "rank", what), hseries_from_json(field(j, "total_chern", what))};
  b.validate();
  return b;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace csmcalc::json_io
