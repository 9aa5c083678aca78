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

#include "discsep/hyperbolic.hpp"

#include "discsep/error.hpp"

namespace discsep::hyper {

void validate(const Disc& d) {
  const Point& c = d.center;
  if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z) ||
      !std::isfinite(d.radius)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite hyperbolic disc");
  }
  if (std::abs(minkowski(c, c) + 1.0) > 1e-9 * c.x * c.x || c.x < 1.0 - 1e-12) {
    throw Error(ErrorKind::kInvalidArgument, "center not on the hyperboloid");
  }
  if (!(d.radius > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "disc radius must be positive");
  }
}

double distance(const Point& a, const Point& b) {
  // <a-b, a-b> = 4 sinh^2(d/2); better conditioned than acosh near 0.
  const Vec3 diff = a - b;
  const double q = minkowski(diff, diff);
  return q <= 0.0 ? 0.0 : 2.0 * std::asinh(std::sqrt(q) / 2.0);
}

Geodesic bisector_unchecked(const Disc& c1, const Disc& c2) {
  const Vec3 v = c2.center / std::cosh(c2.radius) - c1.center / std::cosh(c1.radius);
  const double q = minkowski(v, v);
  if (!(q > 0.0)) throw Error(ErrorKind::kDegenerate, "degenerate pair");
  return Geodesic{v / std::sqrt(q)};
}

Geodesic bisector(const Disc& c1, const Disc& c2) {
  validate(c1);
  validate(c2);
  const double d = distance(c1.center, c2.center);
  if (d == 0.0) throw Error(ErrorKind::kDegenerate, "degenerate pair: equal centers");
  if (d <= c1.radius + c2.radius) {
    throw Error(ErrorKind::kNotAPacking, "not a packing: discs overlap");
  }
  return bisector_unchecked(c1, c2);
}

Point from_poincare(const Vec2& p) {
  const double r2 = norm2(p);
  if (!(r2 < 1.0) || std::sqrt(r2) >= 1.0 - 1e-12) {
    throw Error(ErrorKind::kInvalidArgument, "outside Poincare disc");
  }
  const double s = 1.0 / (1.0 - r2);
  return {(1.0 + r2) * s, 2.0 * p.x * s, 2.0 * p.y * s};
}

Vec2 to_poincare(const Point& x) { return Vec2{x.y, x.z} / (1.0 + x.x); }

Point from_klein(const Vec2& k) {
  const double r2 = norm2(k);
  if (!(r2 < 1.0)) throw Error(ErrorKind::kInvalidArgument, "outside Klein disc");
  const double x0 = 1.0 / std::sqrt(1.0 - r2);
  return {x0, k.x * x0, k.y * x0};
}

Vec2 to_klein(const Point& x) { return Vec2{x.y, x.z} / x.x; }

Point polar(double dist, double angle) {
  const double s = std::sinh(dist);
  return {std::cosh(dist), s * std::cos(angle), s * std::sin(angle)};
}

Point renormalize(const Point& x) {
  return {std::sqrt(1.0 + x.y * x.y + x.z * x.z), x.y, x.z};
}

}  // namespace discsep::hyper
