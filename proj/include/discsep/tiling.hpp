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

// Separating diagrams: one convex cell per disc, cut out of the domain by the
// pairwise equipotential boundaries.
//
//   plane      cell_i = box  ∩ {x : power(x, C_i)     <= power(x, C_j)}
//   sphere     cell_i =        {u : potential(u, C_i) >= potential(u, C_j)}
//   hyperbolic cell_i =        {X : potential(X, C_i) <= potential(X, C_j)}
//
// Every cell keeps its full constraint list, one entry per other disc (plus
// the four box sides in the plane), so neighbouring cells always carry the
// same boundary with opposite orientation. Edge labels index into that list.

#ifndef DISCSEP_TILING_HPP_
#define DISCSEP_TILING_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "discsep/euclidean.hpp"
#include "discsep/hyperbolic.hpp"
#include "discsep/spherical.hpp"

namespace discsep {

enum class Geometry { kEuclidean, kSphere, kHyperbolic };

// Constraint provenance: index of the other disc, or one of these.
inline constexpr int kBoxSide = -1;
inline constexpr int kIdealArc = -1;  // edge label for an arc at infinity

// ---------------------------------------------------------------- plane

struct EConstraint {
  euclid::Line line;
  int other = kBoxSide;
};

struct ConvexCellE {
  int owner = -1;
  std::vector<EConstraint> constraints;
  std::vector<euclid::Point> vertices;  // counterclockwise
  std::vector<int> edges;               // constraint index per edge

  bool empty() const { return vertices.size() < 3; }
};

struct EuclideanTiling {
  euclid::Box bbox;
  std::vector<ConvexCellE> cells;
};

ConvexCellE box_cell(const euclid::Box& box, int owner);
ConvexCellE clip_cell(const ConvexCellE& cell, const euclid::Line& line,
                      int other = kBoxSide);
double cell_area(const ConvexCellE& cell);

// ---------------------------------------------------------------- sphere

enum class SCellKind { kFull, kHemisphere, kLune, kPolygon, kEmpty };

struct SConstraint {
  sphere::GreatCircle circle;
  int other = -1;
};

struct ConvexCellS {
  int owner = -1;
  SCellKind kind = SCellKind::kFull;
  std::vector<SConstraint> constraints;
  // Empty for kFull/kHemisphere/kEmpty, two antipodal points for kLune.
  std::vector<sphere::Point> vertices;
  std::vector<int> edges;
};

struct SphericalTiling {
  std::vector<ConvexCellS> cells;
};

ConvexCellS clip_cell(const ConvexCellS& cell, const sphere::GreatCircle& circle,
                      int other = -1);
double cell_area(const ConvexCellS& cell);

// ---------------------------------------------------------------- hyperbolic

struct HConstraint {
  hyper::Geodesic geodesic;
  int other = -1;
};

struct HVertex {
  hyper::Point point;  // meaningless for ideal vertices
  Vec2 klein;          // on the unit circle for ideal vertices
  bool ideal = false;
};

struct ConvexCellH {
  int owner = -1;
  std::vector<HConstraint> constraints;
  // Counterclockwise in the Klein/Poincare picture. An edge labelled
  // kIdealArc runs along the circle at infinity.
  std::vector<HVertex> vertices;
  std::vector<int> edges;
  bool unbounded = true;
  bool empty = false;  // no interior at all
};

struct HyperbolicTiling {
  double clip_radius = 0.0;  // about the origin; used for area and rendering
  std::vector<ConvexCellH> cells;
};

ConvexCellH whole_plane_cell(int owner);
ConvexCellH clip_cell(const ConvexCellH& cell, const hyper::Geodesic& geodesic,
                      int other = -1);
// Angle-deficit area of a bounded cell; throws kDegenerate for unbounded ones.
double cell_area(const ConvexCellH& cell);
// Area of the cell inside the hyperbolic disc of the given radius about the
// origin.
double cell_area_clipped(const ConvexCellH& cell, double clip_radius);
// Area of the geodesic triangle with the given vertices.
double triangle_area(const hyper::Point& a, const hyper::Point& b,
                     const hyper::Point& c);

// Boundary of cell ∩ {|k| <= radius} in the Klein disc, as a loop of points
// with labels: constraint index for chords, kIdealArc for circle arcs.
struct KleinRegion {
  std::vector<Vec2> points;
  std::vector<int> edges;
  bool full_disc = false;
  bool empty = false;
};
KleinRegion klein_region(const ConvexCellH& cell, double radius);

// ---------------------------------------------------------------- builders

void validate_packing(std::span<const euclid::Disc> discs, const euclid::Box& box);
void validate_packing(std::span<const sphere::Disc> discs);
void validate_packing(std::span<const hyper::Disc> discs);

EuclideanTiling build_power_diagram(std::span<const euclid::Disc> discs,
                                    const euclid::Box& box);
SphericalTiling build_spherical_diagram(std::span<const sphere::Disc> discs);
// clip_radius <= 0 selects the default: max center distance + max radius + 2.
HyperbolicTiling build_hyperbolic_diagram(std::span<const hyper::Disc> discs,
                                          double clip_radius = 0.0);

double default_clip_radius(std::span<const hyper::Disc> discs);

// ---------------------------------------------------------------- checks

struct VerifyReport {
  bool passed = true;
  std::string message;  // first violation, empty on success
  int cell = -1;
};

VerifyReport verify_separating_tiling(std::span<const euclid::Disc> discs,
                                      const EuclideanTiling& tiling,
                                      double tol = 1e-9);
VerifyReport verify_separating_tiling(std::span<const sphere::Disc> discs,
                                      const SphericalTiling& tiling,
                                      double tol = 1e-9);
VerifyReport verify_separating_tiling(std::span<const hyper::Disc> discs,
                                      const HyperbolicTiling& tiling,
                                      double tol = 1e-9);

// Lowest-index cell containing the point (ties resolved towards the lower
// owner index), or -1.
int locate(const EuclideanTiling& tiling, const euclid::Point& p, double tol = 1e-9);
int locate(const SphericalTiling& tiling, const sphere::Point& u, double tol = 1e-9);
int locate(const HyperbolicTiling& tiling, const hyper::Point& x, double tol = 1e-9);

}  // namespace discsep

#endif  // DISCSEP_TILING_HPP_
