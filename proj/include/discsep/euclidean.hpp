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

// Euclidean plane: discs, the power of a point, and radical lines.

#ifndef DISCSEP_EUCLIDEAN_HPP_
#define DISCSEP_EUCLIDEAN_HPP_

#include "discsep/vec.hpp"

namespace discsep::euclid {

using Point = Vec2;

struct Disc {
  Point center;
  double radius = 0.0;
};

// Closed half-plane {x : normal . x <= offset} with a unit normal.
struct Line {
  Vec2 normal;
  double offset = 0.0;

  double eval(const Point& p) const { return dot(normal, p) - offset; }
};

struct Box {
  double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
};

// |AO|^2 - r^2: negative inside, zero on the circle, the squared tangent
// length outside.
inline double power(const Point& a, const Disc& c) {
  return norm2(a - c.center) - c.radius * c.radius;
}

// Equal-power line of two disjoint discs, oriented so that the first disc
// lies in the half-plane. Throws kDegenerate for concentric discs and
// kNotAPacking when the discs overlap.
Line radical_line(const Disc& c1, const Disc& c2);

// Unchecked variant used by the diagram builder after the packing has been
// validated as a whole.
Line radical_line_unchecked(const Disc& c1, const Disc& c2);

// Validates a single disc (finite center, positive radius).
void validate(const Disc& d);

}  // namespace discsep::euclid

#endif  // DISCSEP_EUCLIDEAN_HPP_
