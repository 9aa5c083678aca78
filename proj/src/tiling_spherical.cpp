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

// Spherical cells are intersections of closed hemispheres. A boundary edge
// with normal m runs from vertex a in direction m x a (interior on the left
// when seen from outside the sphere), i.e. along a(θ) = a cos θ + (m x a) sin θ.
// Edges of a lune are half great circles, so endpoints alone do not fix an
// edge; the normal does.

#include <algorithm>
#include <string>

#include "discsep/error.hpp"
#include "discsep/tiling.hpp"
#include "tiling_internal.hpp"

namespace discsep {

namespace {

constexpr double kEps = 1e-12;

// Arc parameter of p along the edge leaving a with normal m, in [0, 2π).
double arc_param(const Vec3& a, const Vec3& m, const Vec3& p) {
  double t = std::atan2(dot(cross(m, a), p), dot(a, p));
  if (t < 0.0) t += kTwoPi;
  return t;
}

void make_lune(ConvexCellS& cell, int first, int second) {
  const Vec3& m = cell.constraints[first].circle.normal;
  const Vec3& n = cell.constraints[second].circle.normal;
  const Vec3 v = normalized(cross(m, n));
  cell.kind = SCellKind::kLune;
  cell.vertices = {-v, v};
  cell.edges = {first, second};
}

void set_empty(ConvexCellS& cell) {
  cell.kind = SCellKind::kEmpty;
  cell.vertices.clear();
  cell.edges.clear();
}

// Generic clip of a vertex loop (lune or polygon) against {n . u >= 0}.
void clip_loop(ConvexCellS& cell, const Vec3& n, int label) {
  const std::size_t k = cell.vertices.size();
  std::vector<double> val(k);
  bool any_out = false;
  for (std::size_t i = 0; i < k; ++i) {
    val[i] = dot(n, cell.vertices[i]);
    any_out = any_out || val[i] < -kEps;
  }
  if (!any_out) return;

  auto crossing = [&](std::size_t i) {
    const Vec3& a = cell.vertices[i];
    const Vec3& b = cell.vertices[(i + 1) % k];
    const Vec3& m = cell.constraints[cell.edges[i]].circle.normal;
    const Vec3 w = normalized(cross(m, n));
    const double end = arc_param(a, m, b);
    const double tw = arc_param(a, m, w);
    return tw <= end + kEps ? w : -w;
  };

  std::vector<Vec3> pts;
  std::vector<int> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const double fa = val[i], fb = val[(i + 1) % k];
    const int own = cell.edges[i];
    if (fa >= -kEps) {
      if (fb < -kEps) {
        if (fa > kEps) {
          pts.push_back(cell.vertices[i]);
          edges.push_back(own);
          pts.push_back(crossing(i));
          edges.push_back(label);
        } else {
          pts.push_back(cell.vertices[i]);
          edges.push_back(label);
        }
      } else {
        pts.push_back(cell.vertices[i]);
        edges.push_back(own);
      }
    } else if (fb > kEps) {
      pts.push_back(crossing(i));
      edges.push_back(own);
    }
  }

  std::vector<Vec3> dp;
  std::vector<int> de;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts.size() > 1 && norm(pts[i] - pts[(i + 1) % pts.size()]) <= kEps) continue;
    dp.push_back(pts[i]);
    de.push_back(edges[i]);
  }
  if (dp.size() < 3) {
    set_empty(cell);
    return;
  }
  cell.kind = SCellKind::kPolygon;
  cell.vertices = std::move(dp);
  cell.edges = std::move(de);
}

void clip_in_place(ConvexCellS& cell, const Vec3& n, int other) {
  const int label = static_cast<int>(cell.constraints.size());
  cell.constraints.push_back({sphere::GreatCircle{n}, other});
  switch (cell.kind) {
    case SCellKind::kEmpty:
      return;
    case SCellKind::kFull:
      cell.kind = SCellKind::kHemisphere;
      cell.edges = {label};
      return;
    case SCellKind::kHemisphere: {
      const int first = cell.edges[0];
      const Vec3& m = cell.constraints[first].circle.normal;
      if (norm(cross(m, n)) <= kEps) {
        if (dot(m, n) < 0.0) set_empty(cell);
        return;
      }
      make_lune(cell, first, label);
      return;
    }
    case SCellKind::kLune: {
      const Vec3& v = cell.vertices[1];
      if (std::abs(dot(n, v)) <= kEps) {
        // The new circle passes through both corners of the lune.
        const int e0 = cell.edges[0], e1 = cell.edges[1];
        const Vec3 mid0 = cross(cell.constraints[e0].circle.normal, cell.vertices[0]);
        const Vec3 mid1 = cross(cell.constraints[e1].circle.normal, cell.vertices[1]);
        const double s0 = dot(n, mid0), s1 = dot(n, mid1);
        if (s0 >= -kEps && s1 >= -kEps) return;
        if (s0 <= kEps && s1 <= kEps) {
          set_empty(cell);
          return;
        }
        if (s0 < 0.0) {
          make_lune(cell, label, e1);
        } else {
          make_lune(cell, e0, label);
        }
        return;
      }
      clip_loop(cell, n, label);
      return;
    }
    case SCellKind::kPolygon:
      clip_loop(cell, n, label);
      return;
  }
}

}  // namespace

ConvexCellS clip_cell(const ConvexCellS& cell, const sphere::GreatCircle& circle,
                      int other) {
  ConvexCellS out = cell;
  clip_in_place(out, circle.normal, other);
  return out;
}

double cell_area(const ConvexCellS& cell) {
  switch (cell.kind) {
    case SCellKind::kEmpty:
      return 0.0;
    case SCellKind::kFull:
      return 2.0 * kTwoPi;
    case SCellKind::kHemisphere:
      return kTwoPi;
    case SCellKind::kLune: {
      const Vec3& m = cell.constraints[cell.edges[0]].circle.normal;
      const Vec3& n = cell.constraints[cell.edges[1]].circle.normal;
      return 2.0 * (kPi - angle_between(m, n));
    }
    case SCellKind::kPolygon: {
      // Spherical excess; the interior angle between edges with normals m, n
      // is π minus the angle between the normals.
      const std::size_t k = cell.vertices.size();
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        const Vec3& prev = cell.constraints[cell.edges[(i + k - 1) % k]].circle.normal;
        const Vec3& cur = cell.constraints[cell.edges[i]].circle.normal;
        sum += kPi - angle_between(prev, cur);
      }
      return sum - static_cast<double>(k - 2) * kPi;
    }
  }
  return 0.0;
}

void validate_packing(std::span<const sphere::Disc> discs) {
  for (const auto& d : discs) sphere::validate(d);
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const double gap = angle_between(discs[i].center, discs[j].center) -
                         discs[i].radius - discs[j].radius;
      if (!(gap > internal::kMinClearance)) {
        throw Error(ErrorKind::kNotAPacking, internal::overlap_message(i, j));
      }
    }
  }
}

SphericalTiling build_spherical_diagram(std::span<const sphere::Disc> discs) {
  if (discs.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "no partition for n=1 on sphere");
  }
  validate_packing(discs);
  SphericalTiling tiling;
  tiling.cells.reserve(discs.size());
  for (std::size_t i = 0; i < discs.size(); ++i) {
    ConvexCellS cell;
    cell.owner = static_cast<int>(i);
    for (std::size_t j = 0; j < discs.size(); ++j) {
      if (j == i) continue;
      clip_in_place(cell, sphere::bisector_normal(discs[i], discs[j]), static_cast<int>(j));
    }
    tiling.cells.push_back(std::move(cell));
  }
  return tiling;
}

int locate(const SphericalTiling& tiling, const sphere::Point& u, double tol) {
  int best = -1;
  for (const auto& cell : tiling.cells) {
    if (best >= 0 && cell.owner > best) continue;
    const bool inside = std::all_of(
        cell.constraints.begin(), cell.constraints.end(),
        [&](const SConstraint& c) { return c.circle.eval(u) >= -tol; });
    if (inside) best = cell.owner;
  }
  return best;
}

namespace {

// Is the whole cell inside {n . u <= tol}?
bool cell_below(const ConvexCellS& cell, const Vec3& n, double tol) {
  switch (cell.kind) {
    case SCellKind::kEmpty:
      return true;
    case SCellKind::kFull:
      return false;
    case SCellKind::kHemisphere:
      return norm(cell.constraints[cell.edges[0]].circle.normal + n) <= tol;
    case SCellKind::kLune:
    case SCellKind::kPolygon: {
      for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
        if (dot(n, cell.vertices[i]) > tol) return false;
      }
      if (cell.kind == SCellKind::kLune) {
        for (std::size_t i = 0; i < 2; ++i) {
          const Vec3 mid = cross(cell.constraints[cell.edges[i]].circle.normal, cell.vertices[i]);
          if (dot(n, mid) > tol) return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace

VerifyReport verify_separating_tiling(std::span<const sphere::Disc> discs,
                                      const SphericalTiling& tiling, double tol) {
  using internal::fail;
  if (auto r = internal::check_owners(tiling.cells, discs.size()); !r.passed) return r;

  for (const auto& cell : tiling.cells) {
    int count = 0, found = -1;
    for (std::size_t j = 0; j < discs.size(); ++j) {
      const double s = std::sin(discs[j].radius);
      const bool in = std::all_of(
          cell.constraints.begin(), cell.constraints.end(),
          [&](const SConstraint& c) { return c.circle.eval(discs[j].center) >= s - tol; });
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

  for (const auto& cell : tiling.cells) {
    const std::string tag = "cell " + std::to_string(cell.owner);
    const int nc = static_cast<int>(cell.constraints.size());
    switch (cell.kind) {
      case SCellKind::kEmpty:
        return fail(cell.owner, tag + " is empty");
      case SCellKind::kFull:
        if (nc != 0) return fail(cell.owner, tag + " is marked full but has constraints");
        break;
      case SCellKind::kHemisphere: {
        if (cell.edges.size() != 1 || cell.edges[0] < 0 || cell.edges[0] >= nc) {
          return fail(cell.owner, tag + " has a malformed hemisphere");
        }
        const Vec3& m = cell.constraints[cell.edges[0]].circle.normal;
        for (const auto& c : cell.constraints) {
          if (norm(c.circle.normal - m) > tol) {
            return fail(cell.owner, tag + " is not the hemisphere it claims");
          }
        }
        break;
      }
      case SCellKind::kLune:
      case SCellKind::kPolygon: {
        const std::size_t k = cell.vertices.size();
        if (cell.edges.size() != k || (cell.kind == SCellKind::kLune ? k != 2 : k < 3)) {
          return fail(cell.owner, tag + " has a malformed vertex loop");
        }
        for (std::size_t i = 0; i < k; ++i) {
          const int e = cell.edges[i];
          if (e < 0 || e >= nc) return fail(cell.owner, tag + " has a dangling edge label");
          const Vec3& m = cell.constraints[e].circle.normal;
          const Vec3& a = cell.vertices[i];
          const Vec3& b = cell.vertices[(i + 1) % k];
          if (std::abs(dot(m, a)) > tol || std::abs(dot(m, b)) > tol) {
            return fail(cell.owner, tag + " has an edge off its great circle");
          }
          // Sample the edge: it must stay inside every hemisphere.
          const double end = arc_param(a, m, b);
          const Vec3 t = cross(m, a);
          for (int s = 0; s <= 4; ++s) {
            const double th = end * s / 4.0;
            const Vec3 p = a * std::cos(th) + t * std::sin(th);
            for (const auto& c : cell.constraints) {
              if (c.circle.eval(p) < -tol) {
                return fail(cell.owner, tag + " boundary leaves a constraint");
              }
            }
          }
        }
        break;
      }
    }
  }

  const auto index = internal::index_by_other(tiling.cells, discs.size());
  for (std::size_t a = 0; a < tiling.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < tiling.cells.size(); ++b) {
      const auto& ca = tiling.cells[a];
      const auto& cb = tiling.cells[b];
      const int ia = index[a][cb.owner], ib = index[b][ca.owner];
      if (ia >= 0 && ib >= 0 &&
          norm(ca.constraints[ia].circle.normal + cb.constraints[ib].circle.normal) <= tol) {
        continue;
      }
      auto separates = [&](const ConvexCellS& p, const ConvexCellS& q) {
        return std::any_of(p.constraints.begin(), p.constraints.end(), [&](const SConstraint& c) {
          return cell_below(q, c.circle.normal, tol);
        });
      };
      if (!separates(ca, cb) && !separates(cb, ca)) {
        return fail(ca.owner, "cells " + std::to_string(ca.owner) + " and " +
                                  std::to_string(cb.owner) + " overlap");
      }
    }
  }

  double total = 0.0;
  for (const auto& cell : tiling.cells) total += cell_area(cell);
  const double want = 2.0 * kTwoPi;
  if (std::abs(total - want) > 1e-6 * want) {
    return fail(-1, "cell areas sum to " + std::to_string(total) + ", expected 4*pi");
  }
  return {};
}

}  // namespace discsep
