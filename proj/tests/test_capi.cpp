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

#include <cstring>
#include <string>

#include "doctest.h"
#include "discsep/discsep.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  ds_free_string(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ds_version()) == "1.0.0");
  CHECK(std::string(ds_status_name(DS_OK)) == "ok");
  CHECK(std::string(ds_status_name(DS_ERR_VERIFICATION_FAILED)) == "verification failed");
}

TEST_CASE("generate, tile, verify, render") {
  for (ds_geometry g : {DS_EUCLIDEAN, DS_SPHERE, DS_HYPERBOLIC}) {
    ds_packing* p = nullptr;
    REQUIRE(ds_packing_generate(g, 10, 0.05, 0.1, 42, &p) == DS_OK);
    ds_geometry back;
    CHECK(ds_packing_geometry(p, &back) == DS_OK);
    CHECK(back == g);
    size_t n = 0;
    CHECK(ds_packing_size(p, &n) == DS_OK);
    CHECK(n == 10);

    ds_tiling* t = nullptr;
    REQUIRE(ds_tiling_build(p, 0.0, &t) == DS_OK);
    CHECK(ds_verify(p, t, 1e-9) == DS_OK);

    char* json = nullptr;
    REQUIRE(ds_tiling_to_json(t, &json) == DS_OK);
    const std::string text = take(json);
    ds_tiling* t2 = nullptr;
    REQUIRE(ds_tiling_parse(text.c_str(), &t2) == DS_OK);
    CHECK(ds_verify(p, t2, 1e-9) == DS_OK);

    char* svg = nullptr;
    REQUIRE(ds_render_svg(p, t, nullptr, &svg) == DS_OK);
    CHECK(take(svg).find("<svg") != std::string::npos);

    REQUIRE(ds_packing_to_json(p, &json) == DS_OK);
    ds_packing* p2 = nullptr;
    const std::string ptext = take(json);
    REQUIRE(ds_packing_parse(ptext.c_str(), &p2) == DS_OK);
    REQUIRE(ds_packing_to_json(p2, &json) == DS_OK);
    CHECK(take(json) == ptext);

    ds_tiling_free(t);
    ds_tiling_free(t2);
    ds_packing_free(p);
    ds_packing_free(p2);
  }
}

TEST_CASE("errors") {
  ds_packing* p = nullptr;
  CHECK(ds_packing_parse("{", &p) == DS_ERR_PARSE);
  CHECK(std::string(ds_last_error()).find("invalid JSON") == 0);
  CHECK(ds_packing_parse(R"({"geometry":"sphere","discs":[{"center":[0.9,0,0],"r":0.1}]})", &p) ==
        DS_ERR_PARSE);
  CHECK(std::string(ds_last_error()) == "/discs/0/center: center not unit");
  CHECK(ds_packing_parse(
            R"({"geometry":"euclidean","discs":[{"center":[0,0],"r":1},{"center":[1,0],"r":1}]})",
            &p) == DS_ERR_NOT_A_PACKING);
  CHECK(ds_packing_parse(nullptr, &p) == DS_ERR_INVALID_ARGUMENT);
  CHECK(ds_packing_generate(DS_EUCLIDEAN, 50, 0.2, 0.3, 1, &p) == DS_ERR_SEARCH_FAILED);
  CHECK(std::string(ds_last_error()) == "packing generation failed");
  ds_packing_free(nullptr);
  ds_tiling_free(nullptr);
}

TEST_CASE("verification failure") {
  ds_packing* p = nullptr;
  REQUIRE(ds_packing_parse(
              R"({"geometry":"euclidean","bbox":[0,0,1,1],"discs":[{"center":[0.25,0.5],"r":0.1},{"center":[0.75,0.5],"r":0.1}]})",
              &p) == DS_OK);
  const char* one_cell =
      R"({"geometry":"euclidean","domain":{"bbox":[0,0,1,1]},"cells":[)"
      R"({"owner":0,"constraints":[],"vertices":[[0,0],[1,0],[1,1],[0,1]],"edges":[0,0,0,0]},)"
      R"({"owner":1,"constraints":[{"normal":[-1,0],"offset":-0.5,"other":0}],"vertices":[[0.5,0],[1,0],[1,1],[0.5,1]],"edges":[0,0,0,0]}]})";
  ds_tiling* t = nullptr;
  REQUIRE(ds_tiling_parse(one_cell, &t) == DS_OK);
  CHECK(ds_verify(p, t, 1e-9) == DS_ERR_VERIFICATION_FAILED);
  CHECK(std::string(ds_last_error()) == "cell 0 contains 2 discs");
  ds_tiling_free(t);
  ds_packing_free(p);
}

TEST_CASE("caps") {
  const double square[] = {0, 0, 1, 0, 1, 1, 0, 1};
  ds_cap cap;
  REQUIRE(ds_caps_isosceles(square, 4, 1.0, &cap) == DS_OK);
  CHECK(cap.side1 == doctest::Approx(cap.side2).epsilon(1e-9));
  CHECK(cap.angle == doctest::Approx(1.0));
  int found = 0;
  REQUIRE(ds_caps_non_isosceles(square, 4, 1e-3, &cap, &found) == DS_OK);
  CHECK(found == 1);
  const double line[] = {0, 0, 1, 0, 2, 0};
  CHECK(ds_caps_isosceles(line, 3, 1.0, &cap) == DS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("counterexample") {
  ds_packing* p = nullptr;
  int certified = 0;
  REQUIRE(ds_counterexample(R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})", &p, &certified) == DS_OK);
  CHECK(certified == 1);
  char* json = nullptr;
  REQUIRE(ds_packing_to_json(p, &json) == DS_OK);
  const std::string text = take(json);
  CHECK(text.find("\"certificate\"") != std::string::npos);
  CHECK(text.find("\"feasible\"") == std::string::npos);
  ds_packing_free(p);
}
