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

#include "discsep/spherical.hpp"

#include "discsep/error.hpp"

namespace discsep::sphere {

void validate_point(const Point& u) {
  if (!std::isfinite(u.x) || !std::isfinite(u.y) || !std::isfinite(u.z)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite sphere point");
  }
  if (std::abs(norm(u) - 1.0) > 1e-12) {
    throw Error(ErrorKind::kInvalidArgument, "center not unit");
  }
}

void validate(const Disc& d) {
  validate_point(d.center);
  if (!(d.radius > 0.0) || !(d.radius < kMaxRadius)) {
    throw Error(ErrorKind::kInvalidArgument,
                "spherical radius must lie in (0, pi/2)");
  }
}

Vec3 bisector_normal(const Disc& c1, const Disc& c2) {
  // potential(u, c1) - potential(u, c2) = u . (O1 / cos r1 - O2 / cos r2)
  return normalized(c1.center / std::cos(c1.radius) -
                    c2.center / std::cos(c2.radius));
}

namespace {

void check_pair(const Disc& c1, const Disc& c2) {
  validate(c1);
  validate(c2);
  const double s = norm(cross(c1.center, c2.center));
  if (s < 1e-12) throw Error(ErrorKind::kDegenerate, "degenerate pair");
  if (angle_between(c1.center, c2.center) <= c1.radius + c2.radius) {
    throw Error(ErrorKind::kNotAPacking, "not a packing: caps overlap");
  }
}

}  // namespace

GreatCircle bisector(const Disc& c1, const Disc& c2) {
  check_pair(c1, c2);
  return GreatCircle{bisector_normal(c1, c2)};
}

std::pair<Point, Point> equipotential_points(const Disc& c1, const Disc& c2) {
  check_pair(c1, c2);
  const Vec3 plane = normalized(cross(c1.center, c2.center));
  Vec3 p = normalized(cross(plane, bisector_normal(c1, c2)));
  if (dot(p, c1.center + c2.center) < 0.0) p = -p;
  return {p, -p};
}

Point foot_of_perpendicular(const Point& a, const GreatCircle& g) {
  const double h = dot(a, g.normal);
  if (std::abs(h) >= 1.0 - 1e-12) {
    throw Error(ErrorKind::kDegenerate, "projection undefined at a pole");
  }
  return normalized(a - g.normal * h);
}

}  // namespace discsep::sphere
