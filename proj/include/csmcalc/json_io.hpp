#ifndef CSMCALC_JSON_IO_HPP
#define CSMCALC_JSON_IO_HPP

// Wire forms. Rationals travel as strings "p/q" or "p"; every object is
// parsed strictly and unknown keys raise Error(parse).

#include "json.hpp"

#include "csmcalc/classes.hpp"

namespace csmcalc::json_io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const GradedClass& a);
json to_json(const HSeries& s);
json to_json(const HypersurfaceSpec& spec);
/// Emits chi, eu and the derived rho, sigma.
json to_json(const InvariantData& inv);
json to_json(const BundleData& b);

Rational rational_from_json(const json& j);
GradedClass graded_class_from_json(const json& j);
HSeries hseries_from_json(const json& j);
HypersurfaceSpec spec_from_json(const json& j);
/// Reads {"chi", "eu"} only; rho and sigma are always derived.
InvariantData invariants_from_json(const json& j);
BundleData bundle_from_json(const json& j);

/// Parses text, mapping syntax errors to Error(parse).
json parse_text(const std::string& text);

}  // namespace csmcalc::json_io

#endif  // CSMCALC_JSON_IO_HPP
