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

#include "discsep/polygon2d.hpp"

#include <cstddef>

namespace discsep {

LabeledPolygon make_rectangle(double xmin, double ymin, double xmax, double ymax,
                              int label) {
  return LabeledPolygon{{{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}},
                        {label, label, label, label}};
}

LabeledPolygon clip_polygon(const LabeledPolygon& poly, const Vec2& normal,
                            double offset, int label, double eps) {
  const std::size_t n = poly.points.size();
  LabeledPolygon out;
  if (n < 3) return out;
  out.points.reserve(n + 1);
  out.edges.reserve(n + 1);

  std::vector<double> val(n);
  bool any_out = false;
  for (std::size_t i = 0; i < n; ++i) {
    val[i] = dot(normal, poly.points[i]) - offset;
    any_out = any_out || val[i] > eps;
  }
  if (!any_out) return poly;

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Vec2& a = poly.points[i];
    const Vec2& b = poly.points[j];
    const double fa = val[i], fb = val[j];
    const int own = poly.edges[i];
    if (fa <= eps) {
      if (fb > eps) {
        if (fa < -eps) {
          out.points.push_back(a);
          out.edges.push_back(own);
          const double t = fa / (fa - fb);
          out.points.push_back(a + (b - a) * t);
          out.edges.push_back(label);
        } else {
          out.points.push_back(a);
          out.edges.push_back(label);
        }
      } else {
        out.points.push_back(a);
        out.edges.push_back(own);
      }
    } else if (fb < -eps) {
      const double t = fa / (fa - fb);
      out.points.push_back(a + (b - a) * t);
      out.edges.push_back(own);
    }
  }

  // Drop zero-length edges; the later vertex carries the outgoing label.
  LabeledPolygon dedup;
  const std::size_t m = out.points.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& next = out.points[(i + 1) % m];
    if (m > 1 && norm(out.points[i] - next) <= eps) continue;
    dedup.points.push_back(out.points[i]);
    dedup.edges.push_back(out.edges[i]);
  }
  if (dedup.points.size() < 3) return LabeledPolygon{};
  return dedup;
}

double signed_area(const std::vector<Vec2>& loop) {
  double s = 0.0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(loop[i], loop[(i + 1) % n]);
  return 0.5 * s;
}

}  // namespace discsep
