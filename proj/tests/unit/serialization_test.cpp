#include "doctest.h"
#include "support/oracles.hpp"

#include "tqftdef/error.hpp"
#include "tqftdef/examples.hpp"
#include "tqftdef/serialization.hpp"

using namespace tqftdef;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

const char* kTiny = R"({
  "algebra": {"basis_labels": ["1"], "mult": [[0,0,0,"1"]], "comult": [[0,0,0,"1"]],
              "unit": [[0,"1"]], "counit": [[0,"1"]]},
  "module": {"basis_labels": ["b"], "act": [[0,0,0,"1"]], "coact": [[0,0,0,"1"]]},
  "defect": {"basis_labels": ["c"], "act": [[0,0,0,1]], "coact": [[0,0,0,"1"]],
             "loop_constant": "1"}
})";

}  // namespace

TEST_CASE("shipped files round-trip byte for byte") {
  for (const auto& name : shipped_system_names()) {
    CAPTURE(name);
    auto text = read_text_file(oracle::data_path("systems/" + name + ".json"));
    auto system = system_from_json(text);
    CHECK(system_to_json(system) == text);
    CHECK(system_to_json(shipped_system(name)) == text);
  }
  for (const auto& name : seed_names()) {
    CAPTURE(name);
    auto text = read_text_file(oracle::data_path("complexes/" + name + ".json"));
    CHECK(complex_to_json(complex_from_json(text)) == text);
    CHECK(complex_from_json(text) == seed_complex(name));
  }
}

TEST_CASE("serialization is stable after one pass") {
  for (const char* name : {"octahedron", "octahedron_equator", "bipyramid_equator", "grid_torus"}) {
    auto once = complex_to_json(oracle::load_complex(name));
    CHECK(complex_to_json(complex_from_json(once)) == once);
  }
}

TEST_CASE("minimal documents") {
  auto system = system_from_json(kTiny);
  REQUIRE(system.algebra.loop_constant.has_value());
  CHECK(*system.algebra.loop_constant == 1);
  CHECK(system.defect.act(0, 0, 0) == 1);
  CHECK_FALSE(system.defect.algebra.has_value());
  CHECK(system_from_json(system_to_json(system)).defect.loop_constant == Scalar(1));
}

TEST_CASE("bad documents") {
  CHECK(code_of([] { system_from_json("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { system_from_json("[]"); }) == ErrorCode::Parse);
  std::string bad_index = kTiny;
  bad_index.replace(bad_index.find("[[0,0,0,\"1\"]]"), 13, "[[0,0,1,\"1\"]]");
  CHECK(code_of([&] { system_from_json(bad_index); }) == ErrorCode::DimensionMismatch);
  std::string bad_scalar = kTiny;
  bad_scalar.replace(bad_scalar.find("\"1\"]]"), 3, "\"1/0\"");
  CHECK(code_of([&] { system_from_json(bad_scalar); }) == ErrorCode::Parse);
  std::string partial = kTiny;
  partial.replace(partial.find("\"loop_constant\""), 15, "\"c_unit\": [[0, \"1\"]], \"loop_constant\"");
  CHECK(code_of([&] { system_from_json(partial); }) == ErrorCode::Parse);
  CHECK(code_of([] { complex_from_json(R"({"vertices": 3})"); }) == ErrorCode::Parse);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), Error);
}

TEST_CASE("triangles are rotated on load and the order defaults") {
  auto c = complex_from_json(R"({
    "vertices": [{"id": 0, "on_curve": false}, {"id": 1, "on_curve": false},
                 {"id": 2, "on_curve": false}, {"id": 3, "on_curve": false}],
    "triangles": [[2, 1, 0], [3, 1, 2], [1, 3, 0], [2, 0, 3]],
    "curve_cycles": []
  })");
  CHECK(c.triangles[0] == Triangle{0, 2, 1});
  CHECK(c.triangles[1] == Triangle{1, 2, 3});
  CHECK(c.off_curve_order == std::vector<int>{0, 1, 2, 3});
  CHECK(validate(c).empty());
}
