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

// Caps of convex polygons.
//
// Two supporting lines of a convex disc C with outward normal angles θ1, θ2
// meet at an apex S outside C. The cap is the pair of segments from S to the
// contact points; its angle is the angle at S, π - ∠(n1, n2). A cap is
// isosceles when both segments have the same length. Circles are the only
// discs whose caps are all isosceles, and every disc has an isosceles cap of
// every angle in (0, π); the searches below find such caps numerically.

#ifndef DISCSEP_CAPS_HPP_
#define DISCSEP_CAPS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "discsep/euclidean.hpp"

namespace discsep::caps {

// Strictly convex polygon, counterclockwise, no repeated or collinear points.
class ConvexDisc {
 public:
  // Canonicalizes the loop (orientation, duplicates, collinear points) and
  // throws kInvalidArgument when it is not convex or has fewer than three
  // corners.
  explicit ConvexDisc(std::vector<Vec2> vertices);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }

  double diameter() const { return diameter_; }
  // Outward normal angle of edge i -> i+1, in [0, 2π).
  double edge_normal(std::size_t i) const { return edge_normals_[i]; }

 private:
  static double signed_area_sign(const std::vector<Vec2>& pts);

  std::vector<Vec2> vertices_;
  std::vector<double> edge_normals_;
  double diameter_ = 0.0;
};

ConvexDisc regular_polygon(int sides, double circumradius = 1.0, double phase = 0.0);

struct SupportLine {
  euclid::Line line;
  // Contact set: vertex indices first..last going counterclockwise; equal for
  // a single vertex, adjacent for a whole edge.
  std::size_t first = 0;
  std::size_t last = 0;

  bool is_edge() const { return first != last; }
};

SupportLine support_line(const ConvexDisc& disc, double normal_angle);

struct Cap {
  Vec2 apex;
  Vec2 contact1;  // on the line with normal angle normal1
  Vec2 contact2;
  double side1 = 0.0;
  double side2 = 0.0;
  double angle = 0.0;
  double normal1 = 0.0;
  double normal2 = 0.0;
};

// Throws kDegenerate for (anti)parallel normals or an apex on the disc. Each
// contact is the point of its contact set nearest to the apex.
Cap cap_from_normals(const ConvexDisc& disc, double normal1, double normal2);

// Cap cut out by the two tangent lines through an exterior point.
Cap cap_from_apex(const ConvexDisc& disc, const Vec2& apex);

inline double relative_difference(const Cap& cap) {
  return std::abs(cap.side1 - cap.side2) / (cap.side1 + cap.side2);
}

bool is_isosceles(const Cap& cap, double tol = 1e-9);

// Isosceles cap with the given angle in (0, π), with
// |side1 - side2| <= tol * diameter. Throws kSearchFailed if none is found.
Cap find_isosceles_cap(const ConvexDisc& disc, double angle, double tol = 1e-9);

// Caps sampled by the non-isosceles search: axis direction x apex angle.
struct CapGrid {
  int directions = 720;
  int angles = 60;
  double min_angle = 0.1;
  double max_angle = kPi / 2;
};

// Grid caps with relative side difference above `margin`, best first.
std::vector<Cap> non_isosceles_candidates(const ConvexDisc& disc, double margin = 1e-3,
                                          const CapGrid& grid = {}, std::size_t limit = 64);

std::optional<Cap> find_non_isosceles_cap(const ConvexDisc& disc, double margin = 1e-3,
                                          const CapGrid& grid = {});

// The cap whose axis (the bisector of the two outward normals) points at
// `axis` and whose angle is `angle`.
Cap cap_at(const ConvexDisc& disc, double axis, double angle);

}  // namespace discsep::caps

#endif  // DISCSEP_CAPS_HPP_
