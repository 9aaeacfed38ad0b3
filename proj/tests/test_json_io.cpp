#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "treekummer/errors.hpp"
#include "treekummer/json_io.hpp"

using namespace treekummer;

namespace {

Json chain3_spec() {
  return Json::parse(R"({
    "tree": {"vertices": 3, "edges": [[0,1],[1,2]]},
    "a": [1.0, 2.0, 0.5],
    "c_diag": [1.0, 1.5, 2.0],
    "c_edge": [
      {"edge": [0,1], "value": 0.7},
      {"edge": [2,1], "value": 1.3}
    ]
  })");
}

}  // namespace

TEST_CASE("tk spec parsing") {
  const TkDistribution d = parse_tk_json(chain3_spec());
  CHECK(d.tree().size() == 3);
  CHECK(d.shape == std::vector<double>{1.0, 2.0, 0.5});
  CHECK(d.params.diag(1) == 1.5);
  // edge order and orientation in the file do not matter
  CHECK(d.params.edge(1, 2) == 1.3);
  CHECK(d.params.edge(1, 0) == 0.7);
}

TEST_CASE("spec errors carry the offending field") {
  Json spec = chain3_spec();
  spec.erase("a");
  CHECK_THROWS_WITH_AS(parse_tk_json(spec), doctest::Contains("\"a\""), InputError);

  spec = chain3_spec();
  spec["c_edge"][1]["edge"] = Json::array({0, 2});
  try {
    parse_tk_json(spec);
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{0,2}") != std::string::npos);
  }

  spec = chain3_spec();
  spec["c_edge"].erase(1);
  try {
    parse_tk_json(spec);
    FAIL("expected throw");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("{1,2}") != std::string::npos);
  }

  // cycles surface from tree validation with the edge count in the message
  spec = chain3_spec();
  spec["tree"]["edges"].push_back(Json::array({0, 2}));
  CHECK_THROWS_AS(parse_tk_json(spec), CycleDetected);

  // non-positive shape is rejected at construction
  spec = chain3_spec();
  spec["a"][0] = 0.0;
  CHECK_THROWS_AS(parse_tk_json(spec), NonPositiveInput);
}

TEST_CASE("report serialization") {
  TestReport r;
  r.method = "ks";
  r.statistic = 0.013;
  r.p_value = 0.4;
  r.level = 1e-3;
  r.reject = false;
  const Json j = report_to_json(r, 42);
  CHECK(j["method"] == "ks");
  CHECK(j["statistic"] == 0.013);
  CHECK(j["p_value"] == 0.4);
  CHECK(j["level"] == 1e-3);
  CHECK(j["decision"] == "accept");
  CHECK(j["seed"] == 42);

  r.p_value.reset();
  CHECK(report_to_json(r, 42)["p_value"].is_null());
}

TEST_CASE("csv output is stable and exact") {
  SampleMatrix m;
  m.rows = 2;
  m.cols = 3;
  m.seed = 7;
  m.data = {1.0, 0.25, 1e-3, 2.0 / 3.0, 1234.5, 0.1};

  const std::string path = "test_output_sample.csv";
  write_sample_csv(m, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string first = ss.str();
  CHECK(first.rfind("0,1,2\n", 0) == 0);
  // round-trippable precision
  CHECK(first.find("0.66666666666666663") != std::string::npos);

  write_sample_csv(m, path);
  std::ifstream in2(path);
  std::stringstream ss2;
  ss2 << in2.rdbuf();
  CHECK(first == ss2.str());
  std::remove(path.c_str());
}

TEST_CASE("spec hash is content-addressed") {
  const std::string p1 = "hash_a.json", p2 = "hash_b.json";
  {
    std::ofstream(p1) << "{\"vertices\":1,\"edges\":[]}";
    std::ofstream(p2) << "{\"vertices\":1,\"edges\":[]} ";
  }
  CHECK(spec_file_hash(p1) == spec_file_hash(p1));
  CHECK(spec_file_hash(p1) != spec_file_hash(p2));
  CHECK(spec_file_hash(p1).size() == 16);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("malformed json surfaces as InputError") {
  const std::string path = "broken.json";
  std::ofstream(path) << "{\"vertices\": 3,";
  CHECK_THROWS_AS(load_spec_file(path), InputError);
  CHECK_THROWS_AS(load_spec_file("no_such_file.json"), InputError);
  std::remove(path.c_str());
}
