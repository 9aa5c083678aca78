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

// Packings of similar copies of a non-circular convex polygon that admit no
// separating tiling.
//
// A non-isosceles cap EPF (|EP| > |FP|) of angle α gives n = ⌊2π/α⌋ and
// β = 2π - nα. Around a tiny ring polygon R with exterior angles α (n times)
// and β, copy k sits in the exterior angle at ring vertex v_k with its cap
// apex on v_k, the long side along the edge leaving v_k and the short side
// along the extension of the edge entering it. A scaled copy with an
// isosceles β cap fills the remaining corner.
//
// Consecutive copies D_k, D_{k+1} touch the line through v_k v_{k+1} from
// opposite sides, and the contacts interlock. Every line strictly separating
// them then keeps R strictly on the side of D_{k+1}. In a separating tiling
// the cell holding a point of R would belong to some D_k, and the common
// boundary of the cells of D_k and D_{k+1} would be such a line, which is
// impossible. The certificate checks exactly this property, pair by pair.

#ifndef DISCSEP_NONSEPARABLE_HPP_
#define DISCSEP_NONSEPARABLE_HPP_

#include <span>
#include <string>
#include <vector>

#include "discsep/caps.hpp"

namespace discsep::nonsep {

struct ConstructionParams {
  caps::Cap cap;  // side1 = |EP| > side2 = |FP|; contact1 = E, contact2 = F
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
  double epsilon = 0.0;
  double scale = 0.0;         // of the copy carrying the β cap
  caps::Cap beta_cap;         // isosceles β cap of the unscaled disc
  double beta_side = 0.0;     // target side of the scaled β cap
  int orientation = 1;        // +1 when the ring runs counterclockwise
};

struct RingPolygon {
  std::vector<Vec2> vertices;         // v_0 .. v_n; v_n is the β corner
  std::vector<double> exterior_angles;  // at v_k
  std::vector<double> side_lengths;     // edge v_k -> v_{k+1}
  std::vector<Vec2> directions;         // unit direction of edge k
};

struct PlacedDisc {
  std::vector<Vec2> base;  // canonical vertices of the input disc
  double rotation = 0.0;
  Vec2 translation;
  double scale = 1.0;

  Vec2 map(const Vec2& p) const { return rotated(p * scale, rotation) + translation; }
  std::vector<Vec2> vertices() const;
};

// Cap-based parameters for the given non-isosceles cap, without searching.
ConstructionParams params_from_cap(const caps::ConvexDisc& disc, const caps::Cap& cap);

// Searches non-isosceles caps best first and returns the first one with
// β > 1e-3. Throws kSearchFailed ("disc too circular") when there is none.
ConstructionParams plan_construction(const caps::ConvexDisc& disc);

RingPolygon build_ring_polygon(const ConstructionParams& params);

std::vector<PlacedDisc> place_copies(const caps::ConvexDisc& disc,
                                     const ConstructionParams& params,
                                     const RingPolygon& ring);

// Signed gap between two convex polygons: the Euclidean distance when they are
// disjoint, minus the penetration depth when they overlap.
double polygon_gap(std::span<const Vec2> a, std::span<const Vec2> b);

// True iff some line strictly separates `first` from `second` (margin delta)
// while a point of `ring` lies in the closed half-plane of `first`. With an
// empty ring this is plain strict separability.
bool separating_line_feasible(std::span<const Vec2> first, std::span<const Vec2> second,
                              std::span<const Vec2> ring, double delta);

// Separating line with the whole ring on one side. Kept for diagnostics: the
// tangent line through a ring edge always passes this test, so it does not
// witness anything about the construction.
bool separating_line_avoiding_ring(std::span<const Vec2> first,
                                   std::span<const Vec2> second,
                                   std::span<const Vec2> ring, double delta);

struct PairStatus {
  int first = 0;
  int second = 0;
  bool separable = false;  // LP feasible
};

struct Certificate {
  bool passed = false;
  std::vector<PairStatus> pairs;
  std::string note;
};

// Checks all cyclically consecutive pairs of the placed discs.
Certificate certify_nonseparable(std::span<const std::vector<Vec2>> discs,
                                 std::span<const Vec2> ring);

struct Construction {
  ConstructionParams params;
  RingPolygon ring;
  std::vector<PlacedDisc> discs;
  Certificate certificate;
};

// Plans, builds and certifies, moving on to the next candidate cap when a
// candidate gives β <= 1e-3, an infeasible ring or overlapping copies.
Construction build_counterexample(const caps::ConvexDisc& disc);

}  // namespace discsep::nonsep

#endif  // DISCSEP_NONSEPARABLE_HPP_
