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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "discsep/error.hpp"
#include "discsep/pack_io.hpp"
#include "discsep/tiling.hpp"
#include "oracles.hpp"

using namespace discsep;

namespace {

std::vector<euclid::Disc> random_plane_packing(int n, double rmin, double rmax, std::uint64_t seed) {
  return io::euclidean_discs(io::gen_random_packing(Geometry::kEuclidean, n, rmin, rmax, seed));
}

std::vector<sphere::Disc> random_sphere_packing(int n, double rmin, double rmax, std::uint64_t seed) {
  return io::sphere_discs(io::gen_random_packing(Geometry::kSphere, n, rmin, rmax, seed));
}

std::vector<hyper::Disc> random_hyper_packing(int n, double rmin, double rmax, std::uint64_t seed) {
  return io::hyperbolic_discs(io::gen_random_packing(Geometry::kHyperbolic, n, rmin, rmax, seed));
}

std::vector<Vec2> sorted(std::vector<Vec2> v) {
  std::sort(v.begin(), v.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  return v;
}

}  // namespace

// ---------------------------------------------------------------- plane

TEST_CASE("one disc fills the box") {
  const euclid::Box box{0, 0, 4, 2};
  const std::vector<euclid::Disc> d{{{1, 1}, 0.5}};
  const auto t = build_power_diagram(d, box);
  REQUIRE(t.cells.size() == 1);
  CHECK(t.cells[0].vertices.size() == 4);
  CHECK(cell_area(t.cells[0]) == doctest::Approx(8.0));
  CHECK(verify_separating_tiling(d, t).passed);
}

TEST_CASE("two equal discs split the box in half") {
  const euclid::Box box{0, 0, 4, 2};
  const std::vector<euclid::Disc> d{{{1, 1}, 0.5}, {{3, 1}, 0.5}};
  const auto t = build_power_diagram(d, box);
  CHECK(sorted(t.cells[0].vertices) == sorted({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(sorted(t.cells[1].vertices) == sorted({{2, 0}, {4, 0}, {4, 2}, {2, 2}}));
  CHECK(cell_area(t.cells[0]) == 4.0);
  CHECK(verify_separating_tiling(d, t).passed);
}

TEST_CASE("clip a box cell") {
  const auto c = clip_cell(box_cell({0, 0, 4, 2}, 0), euclid::Line{{1, 0}, 2});
  CHECK(sorted(c.vertices) == sorted({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(cell_area(box_cell({0, 0, 1, 1}, 0)) == 1.0);
  const auto gone = clip_cell(box_cell({0, 0, 4, 2}, 0), euclid::Line{{1, 0}, -1});
  CHECK(gone.empty());
}

TEST_CASE("power diagram matches point classification") {
  const auto d = random_plane_packing(50, 0.01, 0.06, 3);
  const euclid::Box box{};
  const auto t = build_power_diagram(d, box);
  const auto report = verify_separating_tiling(d, t);
  CHECK_MESSAGE(report.passed, report.message);
  int checked = 0, mismatches = 0;
  for (int i = 0; i < 317; ++i) {
    for (int j = 0; j < 317; ++j) {
      const Vec2 p{(i + 0.5) / 317, (j + 0.5) / 317};
      double gap = 0;
      const int want = oracle::power_argmin(d, p, &gap);
      if (gap <= 1e-9) continue;
      ++checked;
      if (locate(t, p) != want) ++mismatches;
    }
  }
  CHECK(checked > 99000);
  CHECK(mismatches == 0);
}

TEST_CASE("power diagram properties over fuzzed packings") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(1, 120);
    const auto d = random_plane_packing(n, 0.005, 0.03, 100 + trial);
    const auto t = build_power_diagram(d, {});
    const auto report = verify_separating_tiling(d, t);
    CHECK_MESSAGE(report.passed, report.message);
    double total = 0;
    for (const auto& c : t.cells) total += cell_area(c);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    // The owner center is strictly inside every constraint.
    for (const auto& c : t.cells) {
      for (const auto& con : c.constraints) {
        CHECK(con.line.eval(d[c.owner].center) <= -d[c.owner].radius + 1e-12);
      }
    }
  }
}

TEST_CASE("relabelling discs permutes cells") {
  const auto d = random_plane_packing(40, 0.01, 0.05, 8);
  std::vector<int> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  oracle::Rng rng(9);
  for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.integer(0, static_cast<int>(i))]);
  std::vector<euclid::Disc> shuffled(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) shuffled[i] = d[perm[i]];
  const auto a = build_power_diagram(d, {});
  const auto b = build_power_diagram(shuffled, {});
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto va = sorted(a.cells[perm[i]].vertices);
    const auto vb = sorted(b.cells[i].vertices);
    REQUIRE(va.size() == vb.size());
    for (std::size_t k = 0; k < va.size(); ++k) CHECK(distance(va[k], vb[k]) < 1e-12);
  }
}

TEST_CASE("invalid plane packings") {
  const std::vector<euclid::Disc> overlap{{{0.3, 0.5}, 0.2}, {{0.5, 0.5}, 0.2}};
  CHECK_THROWS_WITH(build_power_diagram(overlap, {}),
                    "not a packing: discs 0 and 1 overlap or are closer than 1e-7");
  const std::vector<euclid::Disc> outside{{{0.95, 0.5}, 0.1}};
  try {
    build_power_diagram(outside, {});
    FAIL("disc outside the box accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotAPacking);
  }
}

TEST_CASE("verification rejects a cell holding two discs") {
  const std::vector<euclid::Disc> d{{{0.25, 0.5}, 0.1}, {{0.75, 0.5}, 0.1}};
  auto t = build_power_diagram(d, {});
  t.cells[1] = box_cell({}, 1);
  const auto r = verify_separating_tiling(d, t);
  CHECK_FALSE(r.passed);
  CHECK(r.message == "cell 1 contains 2 discs");
  CHECK(r.cell == 1);

  t.cells.pop_back();
  CHECK(verify_separating_tiling(d, t).message == "tiling has 1 cells for 2 discs");
}

// ---------------------------------------------------------------- sphere

TEST_CASE("two caps give two hemispheres") {
  const std::vector<sphere::Disc> d{{{1, 0, 0}, 0.3}, {{0, 0, 1}, 0.5}};
  const auto t = build_spherical_diagram(d);
  for (const auto& c : t.cells) {
    CHECK(c.kind == SCellKind::kHemisphere);
    CHECK(c.vertices.empty());
    CHECK(cell_area(c) == doctest::Approx(2 * kPi));
  }
  CHECK(verify_separating_tiling(d, t).passed);
}

TEST_CASE("three caps on the axes") {
  const std::vector<sphere::Disc> d{{{1, 0, 0}, 0.3}, {{0, 1, 0}, 0.3}, {{0, 0, 1}, 0.3}};
  const auto t = build_spherical_diagram(d);
  const Vec3 m = normalized(Vec3{1, 1, 1});
  for (const auto& c : t.cells) {
    REQUIRE(c.kind == SCellKind::kLune);
    REQUIRE(c.vertices.size() == 2);
    const double e0 = std::min(norm(c.vertices[0] - m), norm(c.vertices[0] + m));
    CHECK(e0 < 1e-15);
    CHECK(norm(c.vertices[0] + c.vertices[1]) < 1e-15);
    CHECK(cell_area(c) == doctest::Approx(4 * kPi / 3).epsilon(1e-14));
  }
  int mismatches = 0;
  for (const auto& u : oracle::sphere_grid(100000)) {
    double gap = 0;
    const int want = oracle::sphere_argmax(d, u, &gap);
    if (gap > 1e-9 && locate(t, u) != want) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("sphere clipping degeneracies") {
  ConvexCellS full;
  full.owner = 0;
  CHECK(cell_area(full) == doctest::Approx(4 * kPi));
  const auto hemi = clip_cell(full, {{0, 0, 1}});
  CHECK(hemi.kind == SCellKind::kHemisphere);
  CHECK(hemi.vertices.empty());
  CHECK(cell_area(hemi) == doctest::Approx(2 * kPi));
  const auto lune = clip_cell(hemi, {{1, 0, 0}});
  CHECK(lune.kind == SCellKind::kLune);
  REQUIRE(lune.vertices.size() == 2);
  CHECK(std::abs(std::abs(lune.vertices[0].y) - 1.0) < 1e-15);
  CHECK(norm(lune.vertices[0] + lune.vertices[1]) < 1e-15);
  CHECK(cell_area(lune) == doctest::Approx(kPi));
  const auto tri = clip_cell(lune, {{0, 1, 0}});
  CHECK(tri.kind == SCellKind::kPolygon);
  CHECK(tri.vertices.size() == 3);
  CHECK(cell_area(tri) == doctest::Approx(kPi / 2));
  const auto none = clip_cell(hemi, {{0, 0, -1}});
  CHECK((none.kind == SCellKind::kEmpty || cell_area(none) < 1e-12));
}

TEST_CASE("spherical diagrams over fuzzed packings") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.integer(2, 60);
    const auto d = random_sphere_packing(n, 0.02, 0.2, 200 + trial);
    const auto t = build_spherical_diagram(d);
    const auto report = verify_separating_tiling(d, t);
    CHECK_MESSAGE(report.passed, report.message);
    double total = 0;
    for (const auto& c : t.cells) total += cell_area(c);
    CHECK(total == doctest::Approx(4 * kPi).epsilon(1e-9));
  }
  const auto d = random_sphere_packing(40, 0.05, 0.3, 77);
  const auto t = build_spherical_diagram(d);
  int mismatches = 0;
  for (const auto& u : oracle::sphere_grid(100000)) {
    double gap = 0;
    const int want = oracle::sphere_argmax(d, u, &gap);
    if (gap > 1e-9 && locate(t, u) != want) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("invalid spherical packings") {
  const std::vector<sphere::Disc> one{{{1, 0, 0}, 0.3}};
  CHECK_THROWS_WITH(build_spherical_diagram(one), "no partition for n=1 on sphere");
  const std::vector<sphere::Disc> overlap{{{1, 0, 0}, 0.5}, {{0, 1, 0}, 1.1}};
  CHECK_THROWS(build_spherical_diagram(overlap));
  const std::vector<sphere::Disc> big{{{1, 0, 0}, kPi / 2}, {{-1, 0, 0}, 0.1}};
  CHECK_THROWS(build_spherical_diagram(big));
}

TEST_CASE("spherical coverage failure is reported") {
  const auto d = random_sphere_packing(6, 0.1, 0.2, 5);
  auto t = build_spherical_diagram(d);
  // Shrink cell 0 by a hemisphere that still holds disc 0.
  const Vec3 c = d[0].center;
  const Vec3 side = normalized(cross(c, Vec3{0.3, 0.5, 0.7}));
  const Vec3 n = normalized(c * std::sin(d[0].radius + 0.05) + side * std::cos(d[0].radius + 0.05));
  t.cells[0] = clip_cell(t.cells[0], {n}, -1);
  const auto r = verify_separating_tiling(d, t);
  CHECK_FALSE(r.passed);
  CHECK(r.message.find("cell areas sum to") == 0);
}

// ---------------------------------------------------------------- hyperbolic

TEST_CASE("hyperbolic single disc and equal pair") {
  const std::vector<hyper::Disc> one{{hyper::kOrigin, 1.0}};
  const auto t1 = build_hyperbolic_diagram(one);
  REQUIRE(t1.cells.size() == 1);
  CHECK(t1.cells[0].constraints.empty());
  CHECK(t1.cells[0].unbounded);
  CHECK_THROWS_WITH(cell_area(t1.cells[0]), "unbounded");
  CHECK(cell_area_clipped(t1.cells[0], 3.0) == doctest::Approx(2 * kPi * (std::cosh(3.0) - 1)));

  const std::vector<hyper::Disc> two{{hyper::polar(1.0, 0.0), 0.5}, {hyper::polar(1.0, kPi), 0.5}};
  const auto t2 = build_hyperbolic_diagram(two, 4.0);
  for (const auto& c : t2.cells) {
    REQUIRE(c.constraints.size() == 1);
    CHECK(std::abs(c.constraints[0].geodesic.eval(hyper::kOrigin)) < 1e-15);
    CHECK(cell_area_clipped(c, 4.0) == doctest::Approx(kPi * (std::cosh(4.0) - 1)));
  }
  CHECK(verify_separating_tiling(two, t2).passed);
}

TEST_CASE("hyperbolic triangle area") {
  // Equilateral triangle with angles π/4: cosh R = cot(π/3) cot(π/8).
  const double r = std::acosh(std::tan(kPi / 6) / std::tan(kPi / 8));
  const auto a = hyper::polar(r, 0.0), b = hyper::polar(r, 2 * kPi / 3), c = hyper::polar(r, 4 * kPi / 3);
  CHECK(triangle_area(a, b, c) == doctest::Approx(kPi / 4).epsilon(1e-12));

  oracle::Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const auto p = hyper::polar(rng.uniform(0, 4), rng.uniform(0, kTwoPi));
    const auto q = hyper::polar(rng.uniform(0, 4), rng.uniform(0, kTwoPi));
    const auto s = hyper::polar(rng.uniform(0, 4), rng.uniform(0, kTwoPi));
    const double want = oracle::hyperbolic_triangle_area(hyper::distance(q, s), hyper::distance(p, s),
                                                         hyper::distance(p, q));
    if (want < 1e-3) continue;
    CHECK(triangle_area(p, q, s) == doctest::Approx(want).epsilon(1e-7));
  }
}

TEST_CASE("bounded hyperbolic cell") {
  std::vector<hyper::Disc> d{{hyper::kOrigin, 0.3}};
  for (int k = 0; k < 6; ++k) d.push_back({hyper::polar(1.5, k * kPi / 3), 0.3});
  const auto t = build_hyperbolic_diagram(d, 6.0);
  const auto& c = t.cells[0];
  CHECK_FALSE(c.unbounded);
  CHECK(c.vertices.size() == 6);
  // Regular hexagon with inradius 0.75: cosh R = cot(π/6) cot(A/2), cos(A/2) = cosh(0.75) sin(π/6).
  const double half_angle = std::acos(std::cosh(0.75) * 0.5);
  CHECK(cell_area(c) == doctest::Approx(4 * kPi - 12 * half_angle).epsilon(1e-12));
  CHECK(cell_area_clipped(c, 6.0) == doctest::Approx(cell_area(c)).epsilon(1e-9));
  CHECK(verify_separating_tiling(d, t).passed);
}

TEST_CASE("hyperbolic diagrams match point classification") {
  const auto d = random_hyper_packing(30, 0.05, 0.5, 17);
  const auto t = build_hyperbolic_diagram(d, 8.0);
  const auto report = verify_separating_tiling(d, t);
  CHECK_MESSAGE(report.passed, report.message);
  double total = 0;
  for (const auto& c : t.cells) total += cell_area_clipped(c, 8.0);
  CHECK(total == doctest::Approx(2 * kPi * (std::cosh(8.0) - 1)).epsilon(1e-6));

  std::vector<oracle::PoincareDisc> pd;
  for (const auto& disc : d) pd.push_back({hyper::to_poincare(disc.center), disc.radius});
  const double rho = std::tanh(4.0);
  int checked = 0, mismatches = 0;
  for (int i = 0; i < 357; ++i) {
    for (int j = 0; j < 357; ++j) {
      const Vec2 p{rho * (-1 + (2 * i + 1) / 357.0), rho * (-1 + (2 * j + 1) / 357.0)};
      if (norm(p) >= rho) continue;
      double gap = 0;
      const int want = oracle::hyper_argmin(pd, p, &gap);
      if (gap <= 1e-9) continue;
      ++checked;
      if (locate(t, hyper::from_poincare(p)) != want) ++mismatches;
    }
  }
  CHECK(checked > 99000);
  CHECK(mismatches == 0);
}

TEST_CASE("hyperbolic verification failures") {
  const auto d = random_hyper_packing(5, 0.1, 0.4, 4);
  auto t = build_hyperbolic_diagram(d);
  t.cells[2] = whole_plane_cell(2);
  const auto r = verify_separating_tiling(d, t);
  CHECK_FALSE(r.passed);
  CHECK(r.message == "cell 2 contains 5 discs");
}
