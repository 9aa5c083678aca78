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

// SVG figures. Layers: <g id="cells"> with one closed path per visible cell,
// <g id="discs"> and <g id="annotations">. Curves are polylines sampled at
// steps of at most 0.01 (radians, or Klein-disc length for geodesics).
//
//   plane       y flipped, viewport = bbox unless overridden
//   sphere      orthographic view along view_dir, front hemisphere only
//   hyperbolic  Poincare disc

#ifndef DISCSEP_SVG_HPP_
#define DISCSEP_SVG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "discsep/pack_io.hpp"

namespace discsep::svg {

struct RenderOptions {
  double size = 800.0;  // width of the picture in px
  std::optional<euclid::Box> viewport;
  Vec3 view_dir{0.0, 0.0, 1.0};
  bool labels = true;
};

inline constexpr double kMaxStep = 0.01;

std::string render_svg(const io::PackingDocument& packing, const io::TilingDocument* tiling,
                       const RenderOptions& options = {});

// Model-space boundary samples of each cell, empty for cells that are not
// drawn (2-D points for the plane, unit vectors for the sphere, hyperboloid
// points for the hyperbolic plane, stored as Vec3 with z = 0 in the plane
// case).
std::vector<std::vector<Vec3>> cell_outlines(const io::PackingDocument& packing,
                                             const io::TilingDocument& tiling,
                                             const RenderOptions& options = {});

}  // namespace discsep::svg

#endif  // DISCSEP_SVG_HPP_
