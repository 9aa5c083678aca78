// Copyright 2026 The discsep Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "discsep/error.hpp"
#include "discsep/pack_io.hpp"
#include "oracles.hpp"

using namespace discsep;
using Json = nlohmann::ordered_json;

namespace {

std::string parse_error(const std::string& text) {
  try {
    io::parse_packing(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal document round trip") {
  const std::string text = R"({"geometry":"euclidean","discs":[{"center":[0.5,0.5],"r":0.25}]})";
  const auto doc = io::parse_packing(text);
  CHECK(doc.discs.size() == 1);
  CHECK_FALSE(doc.bbox.has_value());
  const auto once = io::emit_packing(doc);
  const auto twice = io::emit_packing(io::parse_packing(once));
  CHECK(once == twice);
}

TEST_CASE("generated documents round trip exactly") {
  for (auto g : {Geometry::kEuclidean, Geometry::kSphere, Geometry::kHyperbolic}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto doc = io::gen_random_packing(g, 12, 0.02, 0.1, seed);
      const auto text = io::emit_packing(doc);
      const auto back = io::parse_packing(text);
      REQUIRE(back.discs.size() == doc.discs.size());
      for (std::size_t i = 0; i < doc.discs.size(); ++i) {
        CHECK(back.discs[i].center == doc.discs[i].center);
        CHECK(back.discs[i].r == doc.discs[i].r);
      }
      CHECK(io::emit_packing(back) == text);

      const auto tiling = io::build_tiling(doc);
      const auto ttext = io::emit_tiling(tiling);
      CHECK(io::emit_tiling(io::parse_tiling(ttext)) == ttext);
      CHECK(io::verify(back, io::parse_tiling(ttext)).passed);
    }
  }
}

TEST_CASE("schema errors carry a pointer") {
  CHECK(parse_error(R"({"geometry":"sphere","discs":[{"center":[0.9,0,0],"r":0.1}]})") ==
        "/discs/0/center: center not unit");
  CHECK(parse_error(R"({"geometry":"hyperbolic-poincare","discs":[{"center":[1.2,0],"r":0.1}]})") ==
        "/discs/0/center: outside Poincaré disc");
  CHECK(parse_error(R"({"geometry":"euclidean","discs":[{"center":[0,0],"r":-1}]})") ==
        "/discs/0/r: radius must be positive");
  CHECK(parse_error(R"({"geometry":"plane","discs":[]})") == "/geometry: unknown geometry \"plane\"");
  CHECK(parse_error(R"({"geometry":"euclidean","discs":[{"center":[0,0]}]})") ==
        "/discs/0: missing \"r\"");
  CHECK(parse_error(R"({"geometry":"euclidean","discs":[{"center":[0,0],"r":1}],"extra":1})") ==
        "/extra: unknown key");
  CHECK(parse_error(R"({"geometry":"euclidean","discs":[{"center":[0,0,1],"r":1}]})") ==
        "/discs/0/center: expected 2 numbers");
  CHECK(parse_error("{").find("invalid JSON") == 0);
}

TEST_CASE("overlapping discs are rejected") {
  try {
    io::parse_packing(R"({"geometry":"euclidean","discs":[{"center":[0,0],"r":1},{"center":[1,0],"r":1}]})");
    FAIL("overlap accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotAPacking);
    CHECK(std::string(e.what()).find("discs 0 and 1") != std::string::npos);
  }
}

TEST_CASE("generator is deterministic") {
  const auto a = io::emit_packing(io::gen_random_packing(Geometry::kEuclidean, 10, 0.02, 0.08, 42));
  const auto b = io::emit_packing(io::gen_random_packing(Geometry::kEuclidean, 10, 0.02, 0.08, 42));
  const auto c = io::emit_packing(io::gen_random_packing(Geometry::kEuclidean, 10, 0.02, 0.08, 43));
  CHECK(a == b);
  CHECK(a != c);
  const auto meta = Json::parse(a)["meta"];
  CHECK(meta["seed"] == 42);
}

TEST_CASE("generated packings are packings") {
  const auto sphere = io::gen_random_packing(Geometry::kSphere, 2, 0.3, 0.3, 1);
  const auto caps = io::sphere_discs(sphere);
  CHECK(oracle::angle3(caps[0].center, caps[1].center) > 0.6);

  const auto dense = io::gen_random_packing(Geometry::kEuclidean, 200, 0.005, 0.02, 42);
  const auto discs = io::euclidean_discs(dense);
  REQUIRE(discs.size() == 200);
  double area = 0;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    area += kPi * discs[i].radius * discs[i].radius;
    CHECK(discs[i].center.x - discs[i].radius > 1e-3 - 1e-15);
    CHECK(discs[i].center.y + discs[i].radius < 1 - 1e-3 + 1e-15);
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      CHECK(distance(discs[i].center, discs[j].center) - discs[i].radius - discs[j].radius > 1e-3);
    }
  }
  CHECK(area < 0.3);

  const auto hyp = io::hyperbolic_discs(io::gen_random_packing(Geometry::kHyperbolic, 30, 0.05, 0.5, 3));
  for (const auto& d : hyp) CHECK(hyper::distance(d.center, hyper::kOrigin) <= 5.0 + 1e-9);

  try {
    io::gen_random_packing(Geometry::kEuclidean, 50, 0.2, 0.3, 1);
    FAIL("impossible density accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()) == "packing generation failed");
  }
  CHECK_THROWS(io::gen_random_packing(Geometry::kSphere, 1, 0.1, 0.2, 1));
}

TEST_CASE("verification result for a bad tiling") {
  const auto doc = io::gen_random_packing(Geometry::kEuclidean, 4, 0.05, 0.1, 6);
  auto tiling = Json::parse(io::emit_tiling(io::build_tiling(doc)));
  tiling["cells"][2]["constraints"] = Json::array({tiling["cells"][2]["constraints"][0]});
  const auto r = io::verify(doc, io::parse_tiling(tiling.dump()));
  CHECK_FALSE(r.passed);
  CHECK(r.message.find("cell 2") == 0);
}

TEST_CASE("polygon documents") {
  const auto disc = io::parse_polygon_disc(R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
  CHECK(disc.size() == 4);
  CHECK_THROWS(io::parse_polygon_disc(R"({"vertices":[[0,0],[1,0]]})"));
  CHECK_THROWS(io::parse_polygon_disc(R"({"points":[[0,0],[1,0],[1,1]]})"));
}

TEST_CASE("counterexample document") {
  const auto disc = io::parse_polygon_disc(R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
  const auto c = nonsep::build_counterexample(disc);
  const auto doc = io::counterexample_document(disc, c);
  const auto text = io::emit_packing(doc);
  const auto back = io::parse_packing(text);
  CHECK(io::emit_packing(back) == text);
  const auto copies = io::polygon_copies(back);
  REQUIRE(copies.size() == c.discs.size());
  for (std::size_t k = 0; k < copies.size(); ++k) {
    const auto want = c.discs[k].vertices();
    REQUIRE(copies[k].size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(copies[k][i] == want[i]);
  }
  CHECK(io::polygon_ring(back) == c.ring.vertices);
  const auto j = Json::parse(text);
  CHECK(j["certificate"]["passed"] == true);
  CHECK(j["certificate"]["pairs"].size() == c.discs.size());
  for (const auto& p : j["certificate"]["pairs"]) CHECK(p["status"] == "infeasible");
}
