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

// JSON documents for packings and tilings, and the random packing generator.
//
// Packing:
//   {"geometry": "euclidean" | "sphere" | "hyperbolic-poincare",
//    "bbox": [xmin, ymin, xmax, ymax],          euclidean only, optional
//    "discs": [{"center": [...], "r": ...}],
//    "polygon_disc": {...}, "certificate": {...}, "meta": {...}}   optional
//
// Sphere centers are unit 3-vectors and radii are angles. Hyperbolic centers
// are points of the Poincare disc and radii are hyperbolic lengths.
// Errors carry the JSON pointer of the offending value.

#ifndef DISCSEP_PACK_IO_HPP_
#define DISCSEP_PACK_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "discsep/caps.hpp"
#include "discsep/nonseparable.hpp"
#include "discsep/tiling.hpp"

namespace discsep::io {

struct DiscRecord {
  std::vector<double> center;
  double r = 0.0;
};

struct PackingDocument {
  Geometry geometry = Geometry::kEuclidean;
  std::optional<euclid::Box> bbox;
  std::vector<DiscRecord> discs;
  std::optional<nlohmann::ordered_json> polygon_disc;
  std::optional<nlohmann::ordered_json> certificate;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

const char* geometry_name(Geometry g);
Geometry parse_geometry(std::string_view name);

std::vector<euclid::Disc> euclidean_discs(const PackingDocument& doc);
std::vector<sphere::Disc> sphere_discs(const PackingDocument& doc);
std::vector<hyper::Disc> hyperbolic_discs(const PackingDocument& doc);

// The declared bbox, or the disc bounding box padded by 10% of its size.
euclid::Box effective_bbox(const PackingDocument& doc);

// Parses and validates, including the packing property. Throws kParse for
// syntax and schema errors and kNotAPacking for overlapping discs.
PackingDocument parse_packing(std::string_view text);
std::string emit_packing(const PackingDocument& doc);

using AnyTiling = std::variant<EuclideanTiling, SphericalTiling, HyperbolicTiling>;

struct TilingDocument {
  Geometry geometry = Geometry::kEuclidean;
  AnyTiling tiling;
};

TilingDocument parse_tiling(std::string_view text);
std::string emit_tiling(const TilingDocument& doc);

TilingDocument build_tiling(const PackingDocument& packing, double clip_radius = 0.0);

struct VerifyResult {
  bool passed = false;
  std::string message;
};
VerifyResult verify(const PackingDocument& packing, const TilingDocument& tiling,
                    double tol = 1e-9);

// Rejection sampling with clearance 1e-3 between discs and to the domain
// boundary; aborts after 10^6 rejections. Hyperbolic centers lie within
// distance 5 of the origin. Deterministic for a given seed.
PackingDocument gen_random_packing(Geometry geometry, int n, double rmin, double rmax,
                                   std::uint64_t seed,
                                   const euclid::Box& box = euclid::Box{});

// Polygon file: {"vertices": [[x, y], ...]}.
caps::ConvexDisc parse_polygon_disc(std::string_view text);

// Euclidean packing document for a constructed counterexample: the placed
// copies under "polygon_disc" and the per-pair LP statuses under
// "certificate".
PackingDocument counterexample_document(const caps::ConvexDisc& disc,
                                        const nonsep::Construction& construction);

// World coordinates of the copies stored under "polygon_disc", if any.
std::vector<std::vector<Vec2>> polygon_copies(const PackingDocument& doc);
std::vector<Vec2> polygon_ring(const PackingDocument& doc);

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace discsep::io

#endif  // DISCSEP_PACK_IO_HPP_
