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

// Hyperbolic plane in the hyperboloid model. Points are stored as
// (x0, x1, x2) with x1^2 + x2^2 - x0^2 = -1 and x0 >= 1; Vec3::x holds x0.
// Geodesics are planes through the origin, so equipotential sets of the
// cosh(d(A,O)) / cosh(r) potential are linear here. The Poincare and Klein
// discs are used only at the boundary (I/O, rendering, polygon clipping).

#ifndef DISCSEP_HYPERBOLIC_HPP_
#define DISCSEP_HYPERBOLIC_HPP_

#include "discsep/vec.hpp"

namespace discsep::hyper {

using Point = Vec3;

struct Disc {
  Point center;
  double radius = 0.0;
};

// Closed half-plane {X : <X, normal> <= 0} with <normal, normal> = 1.
struct Geodesic {
  Vec3 normal;

  double eval(const Point& x) const { return minkowski(x, normal); }
};

inline const Point kOrigin{1.0, 0.0, 0.0};

// cosh of the hyperbolic distance, clamped to >= 1.
inline double cosh_distance(const Point& a, const Point& b) {
  const double c = -minkowski(a, b);
  return c < 1.0 ? 1.0 : c;
}

double distance(const Point& a, const Point& b);

inline double potential(const Point& a, const Disc& c) {
  return -minkowski(a, c.center) / std::cosh(c.radius);
}

// Equipotential geodesic of two disjoint discs; the first disc lies in the
// half-plane, which is where its potential is the smaller one.
Geodesic bisector(const Disc& c1, const Disc& c2);
Geodesic bisector_unchecked(const Disc& c1, const Disc& c2);

Point from_poincare(const Vec2& p);
Vec2 to_poincare(const Point& x);
Point from_klein(const Vec2& k);
Vec2 to_klein(const Point& x);

// Point at hyperbolic distance `dist` from the origin in direction `angle`.
Point polar(double dist, double angle);

// Re-projects a nearly valid hyperboloid point onto the sheet.
Point renormalize(const Point& x);

void validate(const Disc& d);

}  // namespace discsep::hyper

#endif  // DISCSEP_HYPERBOLIC_HPP_
