#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csmcalc/error.hpp"
#include "csmcalc/fixtures.hpp"
#include "csmcalc/json_io.hpp"
#include "random_classes.hpp"

using namespace csmcalc;
using json_io::json;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::validation;
}

}  // namespace

TEST_CASE("graded class wire form") {
  const json j = json::parse(R"({"ambient_dim": 3, "coeffs_by_codim": ["0", "4", "-7", "10"]})");
  const GradedClass a = json_io::graded_class_from_json(j);
  CHECK(a == GradedClass::from_terms(3, {0, 4, -7, 10}));
  CHECK(json_io::to_json(a) == j);

  const json h = json::parse(R"({"ambient_dim": 2, "coeffs_by_degree": ["1", "-1/3", "2/4"]})");
  const HSeries s = json_io::hseries_from_json(h);
  CHECK(s == HSeries::from_terms(2, {1, Rational(-1, 3), Rational(1, 2)}));
  CHECK(json_io::to_json(s)["coeffs_by_degree"][2] == "1/2");
}

TEST_CASE("random classes survive a JSON round trip") {
  testing::Gen gen(123);
  for (int trial = 0; trial < 50; ++trial) {
    const GradedClass a = gen.graded(gen.integer(0, 6));
    CHECK(json_io::graded_class_from_json(json::parse(json_io::to_json(a).dump())) == a);
    const HSeries s = gen.series(gen.integer(0, 6));
    CHECK(json_io::hseries_from_json(json::parse(json_io::to_json(s).dump())) == s);
  }
}

TEST_CASE("strict parsing rejects malformed classes") {
  const auto parse = [](const char* text) {
    return [text] { (void)json_io::graded_class_from_json(json::parse(text)); };
  };
  CHECK(kind_of(parse(R"({"ambient_dim": 3, "coeffs_by_codim": ["0", "4", "1"]})")) ==
        ErrorKind::parse);
  CHECK(kind_of(parse(R"({"ambient_dim": 1, "coeffs_by_codim": ["0", "4"], "x": 1})")) ==
        ErrorKind::parse);
  CHECK(kind_of(parse(R"({"ambient_dim": 1, "coeffs_by_codim": [0, 4]})")) == ErrorKind::parse);
  CHECK(kind_of(parse(R"({"ambient_dim": 1, "coeffs_by_codim": ["0", "1/0"]})")) ==
        ErrorKind::parse);
  CHECK(kind_of(parse(R"({"coeffs_by_codim": ["0"]})")) == ErrorKind::parse);
  CHECK(kind_of(parse(R"({"ambient_dim": "1", "coeffs_by_codim": ["0", "1"]})")) ==
        ErrorKind::parse);
  CHECK(kind_of(parse(R"(["0"])")) == ErrorKind::parse);
  CHECK(kind_of([] { (void)json_io::parse_text("{not json"); }) == ErrorKind::parse);
}

TEST_CASE("hypersurface spec wire form") {
  const json j = json_io::parse_text(std::string(*fixture("example41_spec.json")));
  const HypersurfaceSpec spec = json_io::spec_from_json(j);
  CHECK(spec.n == 3);
  CHECK(spec.r == 2);
  CHECK(spec.d == Rational(4));
  REQUIRE(spec.polar.size() == 3);
  CHECK(spec.polar[1] == GradedClass::linear_space(3, 1, 3));
  CHECK(json_io::spec_from_json(json_io::to_json(spec)).polar == spec.polar);

  // Gaps in the polar map are zero classes.
  const json gap = json::parse(R"({"n": 2, "r": 1, "d": "2",
      "polar": {"1": {"ambient_dim": 2, "coeffs_by_codim": ["0", "0", "2"]},
                "0": {"ambient_dim": 2, "coeffs_by_codim": ["0", "2", "0"]}},
      "ambient_tangent": {"ambient_dim": 2, "coeffs_by_degree": ["1", "3", "3"]}})");
  const HypersurfaceSpec g = json_io::spec_from_json(gap);
  CHECK(g.polar[0] == GradedClass::linear_space(2, 1, 2));
  CHECK(g.ambient_tangent == tangent_chern_pn(2));

  json unknown = j;
  unknown["degree"] = 4;
  CHECK(kind_of([&] { (void)json_io::spec_from_json(unknown); }) == ErrorKind::parse);
  json bad_key = j;
  bad_key["polar"]["01"] = bad_key["polar"]["0"];
  CHECK(kind_of([&] { (void)json_io::spec_from_json(bad_key); }) == ErrorKind::parse);
  json beyond = j;
  beyond["polar"]["3"] = json_io::to_json(GradedClass(3));
  CHECK(kind_of([&] { (void)json_io::spec_from_json(beyond); }) == ErrorKind::validation);
}

TEST_CASE("invariants and bundles") {
  const InvariantData inv = json_io::invariants_from_json(json::parse(R"({"chi": "-1", "eu": "2"})"));
  CHECK(inv.rho() == Rational(1, 3));
  const json out = json_io::to_json(inv);
  CHECK(out["sigma"] == "2/3");
  // rho and sigma are never inputs.
  CHECK(kind_of([&] { (void)json_io::invariants_from_json(out); }) == ErrorKind::parse);
  CHECK(kind_of([] {
          (void)json_io::invariants_from_json(json::parse(R"({"chi": "1", "eu": "2"})"));
        }) == ErrorKind::degenerate_invariants);

  const BundleData b = json_io::bundle_from_json(
      json::parse(R"({"rank": 1, "total_chern": {"ambient_dim": 3, "coeffs_by_degree": ["1","4","0","0"]}})"));
  CHECK(b.total_chern == HSeries::linear(3, 1, 4));
  CHECK(kind_of([] {
          (void)json_io::bundle_from_json(json::parse(
              R"({"rank": 1, "total_chern": {"ambient_dim": 1, "coeffs_by_degree": ["2","0"]}})"));
        }) == ErrorKind::validation);
}

TEST_CASE("embedded fixtures match the files on disk") {
  const std::filesystem::path dir = CSMCALC_FIXTURE_DIR;
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream file(entry.path());
    std::ostringstream ss;
    ss << file.rdbuf();
    const auto embedded = fixture(entry.path().filename().string());
    REQUIRE(embedded.has_value());
    CHECK(*embedded == ss.str());
    ++seen;
  }
  CHECK(seen == fixture_names().size());
}
