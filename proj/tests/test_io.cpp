#include <doctest.h>

#include <filesystem>

#include "dualcx/corpus.hpp"
#include "dualcx/errors.hpp"
#include "dualcx/io.hpp"

using namespace dualcx;
using io::json;

#ifndef DUALCX_DATA_DIR
#define DUALCX_DATA_DIR "data"
#endif

namespace {

std::string data(const std::string& name) { return std::string(DUALCX_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("simplicial json roundtrip") {
  for (const auto& [name, c] : corpus::standard()) {
    CAPTURE(name);
    const json j = io::to_json(c);
    CHECK(io::simplicial_from_json(j) == c);
    CHECK(io::simplicial_from_json(json::parse(j.dump())) == c);
  }
  const json j = io::to_json(corpus::path3());
  CHECK(j.dump() == R"({"facets":[["a","b"],["b","c"]],"vertices":["a","b","c"]})");
}

TEST_CASE("malformed simplicial json") {
  CHECK_THROWS_AS(io::simplicial_from_json(json::parse(R"({"vertices": ["a"]})")), InvalidInput);
  CHECK_THROWS_AS(io::simplicial_from_json(json::parse(R"({"vertices": ["a"], "facets": [["a", "b"]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::simplicial_from_json(json::parse(R"({"vertices": ["a", "a"], "facets": []})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::simplicial_from_json(json::parse(R"({"vertices": 3, "facets": []})")), InvalidInput);
  CHECK_THROWS_AS(io::read_json_file(data("malformed.json")), InvalidInput);
  CHECK_THROWS_AS(io::read_json_file(data("does_not_exist.json")), InvalidInput);
}

TEST_CASE("delta json roundtrip") {
  for (const auto& d : {corpus::circle_delta(), corpus::rp2_delta()}) {
    const json j = io::to_json(d);
    CHECK(io::is_delta_json(j));
    const auto back = io::delta_from_json(j);
    CHECK(io::to_json(back) == j);
  }
  CHECK_THROWS_AS(io::delta_from_json(json::parse(R"({"cells": [{"id": 0, "dim": 1, "faces": [0, 0]}]})")),
                  InvalidInput);
}

TEST_CASE("data files match the corpus") {
  CHECK(io::simplicial_from_json(io::read_json_file(data("torus7.json"))) == corpus::torus_7());
  CHECK(io::simplicial_from_json(io::read_json_file(data("rp2.json"))) == corpus::rp2_6());
  CHECK(io::simplicial_from_json(io::read_json_file(data("klein8.json"))) == corpus::klein_8());
  CHECK(io::simplicial_from_json(io::read_json_file(data("path3.json"))) == corpus::path3());
  CHECK(io::to_json(io::delta_from_json(io::read_json_file(data("rp2_delta.json")))) ==
        io::to_json(corpus::rp2_delta()));
  CHECK_THROWS_AS(io::delta_from_json(io::read_json_file(data("not_simplicial_delta.json"))), InvalidInput);
}

TEST_CASE("homology json") {
  const json z = io::to_json(homology(corpus::rp2_6()));
  CHECK(z["betti"] == json::array({1, 0, 0}));
  CHECK(z["torsion"] == json::parse("[[], [2], []]"));
  CHECK(z["q_acyclic"] == true);
  const json q = io::to_json(homology(corpus::rp2_6()), io::Ring::kRationals);
  CHECK_FALSE(q.contains("torsion"));
  CHECK(q["ring"] == "Q");
}

TEST_CASE("trace json is stable") {
  const auto trace = run_construction(corpus::torus_7());
  const auto a = io::dump(io::to_json(trace));
  const auto b = io::dump(io::to_json(run_construction(corpus::torus_7())));
  CHECK(a == b);
  const json j = io::to_json(trace);
  CHECK(j["steps"].size() == 2);
  CHECK(j["steps"][0]["centers"].size() == 21);
  CHECK(j["certificate"]["holds"] == true);
  CHECK(j["f_vector"] == json::array({7, 21, 14}));
}

TEST_CASE("cycle files") {
  const auto cycles = io::cycles_from_json(json::parse(R"({"cycles": [[1, -1, 0]]})"));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].coefficients == std::vector<int>{1, -1, 0});
  CHECK_THROWS_AS(io::cycles_from_json(json::parse(R"({"cycle": []})")), InvalidInput);
}
