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

#include <algorithm>
#include <string>

#include "discsep/error.hpp"
#include "discsep/polygon2d.hpp"
#include "discsep/tiling.hpp"
#include "tiling_internal.hpp"

namespace discsep {

namespace {

double clip_eps(const ConvexCellE& cell) {
  double s = 1.0;
  for (const auto& v : cell.vertices) s = std::max({s, std::abs(v.x), std::abs(v.y)});
  return 1e-12 * s;
}

void clip_in_place(ConvexCellE& cell, const euclid::Line& line, int other) {
  const int label = static_cast<int>(cell.constraints.size());
  cell.constraints.push_back({line, other});
  LabeledPolygon poly{std::move(cell.vertices), std::move(cell.edges)};
  LabeledPolygon out = clip_polygon(poly, line.normal, line.offset, label, clip_eps(cell));
  cell.vertices = std::move(out.points);
  cell.edges = std::move(out.edges);
}

}  // namespace

ConvexCellE box_cell(const euclid::Box& box, int owner) {
  ConvexCellE cell;
  cell.owner = owner;
  // Order matches the rectangle edges: bottom, right, top, left.
  cell.constraints = {{{{0.0, -1.0}, -box.ymin}, kBoxSide},
                      {{{1.0, 0.0}, box.xmax}, kBoxSide},
                      {{{0.0, 1.0}, box.ymax}, kBoxSide},
                      {{{-1.0, 0.0}, -box.xmin}, kBoxSide}};
  LabeledPolygon r = make_rectangle(box.xmin, box.ymin, box.xmax, box.ymax, 0);
  cell.vertices = r.points;
  cell.edges = {0, 1, 2, 3};
  return cell;
}

ConvexCellE clip_cell(const ConvexCellE& cell, const euclid::Line& line, int other) {
  ConvexCellE out = cell;
  clip_in_place(out, line, other);
  return out;
}

double cell_area(const ConvexCellE& cell) {
  return cell.empty() ? 0.0 : signed_area(cell.vertices);
}

void validate_packing(std::span<const euclid::Disc> discs, const euclid::Box& box) {
  if (!(box.xmax > box.xmin) || !(box.ymax > box.ymin)) {
    throw Error(ErrorKind::kInvalidArgument, "bounding box has no interior");
  }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const auto& d = discs[i];
    euclid::validate(d);
    if (d.center.x - d.radius < box.xmin || d.center.x + d.radius > box.xmax ||
        d.center.y - d.radius < box.ymin || d.center.y + d.radius > box.ymax) {
      throw Error(ErrorKind::kNotAPacking,
                  "disc " + std::to_string(i) + " is not inside the bounding box");
    }
  }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const double gap = distance(discs[i].center, discs[j].center) -
                         discs[i].radius - discs[j].radius;
      if (!(gap > internal::kMinClearance)) {
        throw Error(ErrorKind::kNotAPacking, internal::overlap_message(i, j));
      }
    }
  }
}

EuclideanTiling build_power_diagram(std::span<const euclid::Disc> discs,
                                    const euclid::Box& box) {
  validate_packing(discs, box);
  EuclideanTiling tiling;
  tiling.bbox = box;
  tiling.cells.reserve(discs.size());
  for (std::size_t i = 0; i < discs.size(); ++i) {
    ConvexCellE cell = box_cell(box, static_cast<int>(i));
    for (std::size_t j = 0; j < discs.size(); ++j) {
      if (j == i) continue;
      clip_in_place(cell, euclid::radical_line_unchecked(discs[i], discs[j]),
                    static_cast<int>(j));
    }
    tiling.cells.push_back(std::move(cell));
  }
  return tiling;
}

int locate(const EuclideanTiling& tiling, const euclid::Point& p, double tol) {
  int best = -1;
  for (const auto& cell : tiling.cells) {
    if (best >= 0 && cell.owner > best) continue;
    const bool inside = std::all_of(
        cell.constraints.begin(), cell.constraints.end(),
        [&](const EConstraint& c) { return c.line.eval(p) <= tol; });
    if (inside) best = cell.owner;
  }
  return best;
}

VerifyReport verify_separating_tiling(std::span<const euclid::Disc> discs,
                                      const EuclideanTiling& tiling, double tol) {
  using internal::fail;
  const double scale = std::max({1.0, tiling.bbox.width(), tiling.bbox.height()});
  const double t = tol * scale;

  if (auto r = internal::check_owners(tiling.cells, discs.size()); !r.passed) return r;

  // (d) exactly one disc per cell, and it is the owner.
  for (const auto& cell : tiling.cells) {
    int count = 0, found = -1;
    for (std::size_t j = 0; j < discs.size(); ++j) {
      const bool in = std::all_of(
          cell.constraints.begin(), cell.constraints.end(), [&](const EConstraint& c) {
            return -c.line.eval(discs[j].center) >= discs[j].radius - t;
          });
      if (in) {
        ++count;
        found = static_cast<int>(j);
      }
    }
    if (count != 1) return internal::count_failure(cell.owner, count);
    if (found != cell.owner) {
      return fail(cell.owner, "cell " + std::to_string(cell.owner) +
                                  " does not contain its own disc");
    }
  }

  // (a) the vertex loop bounds the constraint intersection.
  for (const auto& cell : tiling.cells) {
    const std::string tag = "cell " + std::to_string(cell.owner);
    if (cell.empty() || cell.edges.size() != cell.vertices.size()) {
      return fail(cell.owner, tag + " has no valid vertex loop");
    }
    const std::size_t n = cell.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = cell.vertices[i];
      const auto& b = cell.vertices[(i + 1) % n];
      const auto& c = cell.vertices[(i + 2) % n];
      if (cross(b - a, c - b) < -t * scale) return fail(cell.owner, tag + " is not convex");
      for (const auto& con : cell.constraints) {
        if (con.line.eval(a) > t) return fail(cell.owner, tag + " has a vertex outside a constraint");
      }
      const int e = cell.edges[i];
      if (e < 0 || e >= static_cast<int>(cell.constraints.size())) {
        return fail(cell.owner, tag + " has a dangling edge label");
      }
      const auto& line = cell.constraints[e].line;
      if (std::abs(line.eval(a)) > t || std::abs(line.eval(b)) > t) {
        return fail(cell.owner, tag + " has an edge off its constraint");
      }
    }
  }

  // (b) neighbours are split by a shared boundary with opposite orientation.
  const auto index = internal::index_by_other(tiling.cells, discs.size());
  for (std::size_t a = 0; a < tiling.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < tiling.cells.size(); ++b) {
      const auto& ca = tiling.cells[a];
      const auto& cb = tiling.cells[b];
      const int ia = index[a][cb.owner], ib = index[b][ca.owner];
      if (ia >= 0 && ib >= 0) {
        const auto& la = ca.constraints[ia].line;
        const auto& lb = cb.constraints[ib].line;
        if (norm(la.normal + lb.normal) <= t && std::abs(la.offset + lb.offset) <= t) continue;
      }
      auto separates = [&](const ConvexCellE& p, const ConvexCellE& q) {
        return std::any_of(p.constraints.begin(), p.constraints.end(), [&](const EConstraint& c) {
          return std::all_of(q.vertices.begin(), q.vertices.end(),
                             [&](const euclid::Point& v) { return c.line.eval(v) >= -t; });
        });
      };
      if (!separates(ca, cb) && !separates(cb, ca)) {
        return fail(ca.owner, "cells " + std::to_string(ca.owner) + " and " +
                                  std::to_string(cb.owner) + " overlap");
      }
    }
  }

  // (c) the cells cover the box.
  double total = 0.0;
  for (const auto& cell : tiling.cells) total += cell_area(cell);
  const double want = tiling.bbox.area();
  if (std::abs(total - want) > 1e-6 * want) {
    return fail(-1, "cell areas sum to " + std::to_string(total) + ", box area is " +
                        std::to_string(want));
  }
  return {};
}

}  // namespace discsep
