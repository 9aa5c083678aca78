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

#include <string>

#include "doctest.h"
#include "discsep/pack_io.hpp"
#include "discsep/svg.hpp"

using namespace discsep;

namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

std::string layer(const std::string& svg, const std::string& id) {
  const auto start = svg.find("<g id=\"" + id + "\"");
  return svg.substr(start, svg.find("</g>", start) - start);
}

}  // namespace

TEST_CASE("packing-only figure") {
  const auto doc = io::gen_random_packing(Geometry::kEuclidean, 5, 0.05, 0.1, 1);
  const auto svg = svg::render_svg(doc, nullptr);
  CHECK(svg.find("<?xml") == 0);
  CHECK(count(layer(svg, "cells"), "<path") == 0);
  CHECK(count(layer(svg, "discs"), "<polyline") == 5);
}

TEST_CASE("one path per plane cell") {
  const auto doc = io::gen_random_packing(Geometry::kEuclidean, 50, 0.01, 0.05, 2);
  const auto tiling = io::build_tiling(doc);
  const auto svg = svg::render_svg(doc, &tiling);
  CHECK(count(layer(svg, "cells"), "<path") == 50);
  CHECK(count(svg, "Z\"/>") == 50);
  CHECK(svg == svg::render_svg(doc, &tiling));
}

TEST_CASE("outlines satisfy their cell constraints") {
  for (auto g : {Geometry::kEuclidean, Geometry::kSphere, Geometry::kHyperbolic}) {
    const auto doc = io::gen_random_packing(g, 25, 0.03, 0.15, 9);
    const auto tiling = io::build_tiling(doc);
    svg::RenderOptions opt;
    opt.view_dir = {0.3, -0.4, 0.8};
    const auto outlines = svg::cell_outlines(doc, tiling, opt);
    int drawn = 0;
    std::visit(
        [&](const auto& t) {
          using T = std::decay_t<decltype(t)>;
          REQUIRE(outlines.size() == t.cells.size());
          for (std::size_t i = 0; i < t.cells.size(); ++i) {
            if (!outlines[i].empty()) ++drawn;
            for (const auto& p : outlines[i]) {
              for (const auto& c : t.cells[i].constraints) {
                if constexpr (std::is_same_v<T, EuclideanTiling>) {
                  CHECK(c.line.eval({p.x, p.y}) <= 1e-6);
                } else if constexpr (std::is_same_v<T, SphericalTiling>) {
                  CHECK(c.circle.eval(p) >= -1e-6);
                  CHECK(dot(p, opt.view_dir) >= -1e-9);
                } else {
                  CHECK(c.geodesic.eval(p) / p.x <= 1e-6);
                }
              }
            }
          }
        },
        tiling.tiling);
    CHECK(drawn > 0);
    const auto svg = svg::render_svg(doc, &tiling, opt);
    CHECK(count(layer(svg, "cells"), "<path") == static_cast<std::size_t>(drawn));
    CHECK(svg == svg::render_svg(doc, &tiling, opt));
  }
}

TEST_CASE("two caps draw a great circle") {
  const auto doc = io::parse_packing(
      R"({"geometry":"sphere","discs":[{"center":[1,0,0],"r":0.3},{"center":[0,1,0],"r":0.3}]})");
  const auto tiling = io::build_tiling(doc);
  const auto outlines = svg::cell_outlines(doc, tiling);
  REQUIRE(outlines.size() == 2);
  const Vec3 n = normalized(Vec3{1, -1, 0});
  int on_circle = 0;
  for (const auto& u : outlines[0]) {
    if (std::abs(dot(u, n)) < 1e-12) ++on_circle;
  }
  // Half a great circle at steps of at most 0.01 rad.
  CHECK(on_circle >= 300);
  const auto svg = svg::render_svg(doc, &tiling);
  CHECK(count(layer(svg, "cells"), "<path") == 2);
}

TEST_CASE("counterexample figure") {
  const auto disc = io::parse_polygon_disc(R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
  const auto doc = io::counterexample_document(disc, nonsep::build_counterexample(disc));
  const auto svg = svg::render_svg(doc, nullptr);
  CHECK(count(layer(svg, "discs"), "<polyline") >= io::polygon_copies(doc).size());
  CHECK(svg == svg::render_svg(doc, nullptr));
}
