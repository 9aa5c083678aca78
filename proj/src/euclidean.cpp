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

#include "discsep/euclidean.hpp"

#include "discsep/error.hpp"

namespace discsep::euclid {

void validate(const Disc& d) {
  if (!std::isfinite(d.center.x) || !std::isfinite(d.center.y) ||
      !std::isfinite(d.radius)) {
    throw Error(ErrorKind::kInvalidArgument, "non-finite disc coordinates");
  }
  if (!(d.radius > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "disc radius must be positive");
  }
}

Line radical_line_unchecked(const Disc& c1, const Disc& c2) {
  // 2 (O2 - O1) . x = |O2|^2 - |O1|^2 + r1^2 - r2^2
  const Vec2 delta = c2.center - c1.center;
  const double len = norm(delta);
  const double rhs = norm2(c2.center) - norm2(c1.center) +
                     c1.radius * c1.radius - c2.radius * c2.radius;
  return Line{delta / len, rhs / (2.0 * len)};
}

Line radical_line(const Disc& c1, const Disc& c2) {
  validate(c1);
  validate(c2);
  const double d = distance(c1.center, c2.center);
  if (d == 0.0) throw Error(ErrorKind::kDegenerate, "concentric pair");
  if (d <= c1.radius + c2.radius) {
    throw Error(ErrorKind::kNotAPacking, "not a packing: discs overlap");
  }
  return radical_line_unchecked(c1, c2);
}

}  // namespace discsep::euclid
