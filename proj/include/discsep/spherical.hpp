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

// Unit sphere: spherical caps ("discs") measured by central angles, the
// cosine potential cos(d(A,O)) / cos(r), and its equipotential great circles.

#ifndef DISCSEP_SPHERICAL_HPP_
#define DISCSEP_SPHERICAL_HPP_

#include <utility>

#include "discsep/vec.hpp"

namespace discsep::sphere {

using Point = Vec3;  // unit vector

// Radius strictly below a quarter turn so that cos(radius) > 0.
inline constexpr double kMaxRadius = kPi / 2 - 1e-9;

struct Disc {
  Point center;
  double radius = 0.0;
};

// Closed hemisphere {u : normal . u >= 0}.
struct GreatCircle {
  Vec3 normal;

  double eval(const Point& u) const { return dot(normal, u); }
};

inline double potential(const Point& a, const Disc& c) {
  return dot(a, c.center) / std::cos(c.radius);
}

// Equipotential great circle of two disjoint caps. The returned hemisphere
// holds the first cap and is exactly where its potential is the larger one.
// Throws kDegenerate for equal or antipodal centers, kNotAPacking on overlap.
GreatCircle bisector(const Disc& c1, const Disc& c2);

// Normal of the equipotential circle without the pairwise checks. Defined for
// antipodal centers as well, where the great circle through both centers is
// not unique but the equipotential set still is.
Vec3 bisector_normal(const Disc& c1, const Disc& c2);

// The two antipodal equipotential points on the great circle through both
// centers. The first one lies on the short arc between the two caps.
std::pair<Point, Point> equipotential_points(const Disc& c1, const Disc& c2);

// Closest point of the great circle to `a`. Throws kDegenerate at the poles.
Point foot_of_perpendicular(const Point& a, const GreatCircle& g);

void validate(const Disc& d);
void validate_point(const Point& u);

}  // namespace discsep::sphere

#endif  // DISCSEP_SPHERICAL_HPP_
