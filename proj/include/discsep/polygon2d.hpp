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

// Planar convex polygons with per-edge labels, clipped one half-plane at a
// time. Shared by the Euclidean cells, the Klein-model hyperbolic cells and
// the two-variable feasibility checks.

#ifndef DISCSEP_POLYGON2D_HPP_
#define DISCSEP_POLYGON2D_HPP_

#include <vector>

#include "discsep/vec.hpp"

namespace discsep {

struct LabeledPolygon {
  std::vector<Vec2> points;  // counterclockwise
  std::vector<int> edges;    // edges[i] labels the edge points[i] -> points[i+1]

  bool empty() const { return points.size() < 3; }
};

LabeledPolygon make_rectangle(double xmin, double ymin, double xmax, double ymax,
                              int label);

// Keeps the part with normal . x <= offset. Points within `eps` of the line
// count as inside. New edges along the line get `label`. Returns a polygon
// with fewer than three points when the result has empty interior.
LabeledPolygon clip_polygon(const LabeledPolygon& poly, const Vec2& normal,
                            double offset, int label, double eps);

// Signed shoelace area (positive for counterclockwise loops).
double signed_area(const std::vector<Vec2>& loop);

}  // namespace discsep

#endif  // DISCSEP_POLYGON2D_HPP_
