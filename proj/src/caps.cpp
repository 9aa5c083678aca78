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

#include "discsep/caps.hpp"

#include <algorithm>
#include <string>

#include "discsep/error.hpp"

namespace discsep::caps {

namespace {

double wrap(double angle) {
  angle = std::fmod(angle, kTwoPi);
  return angle < 0.0 ? angle + kTwoPi : angle;
}

Vec2 intersect(const Vec2& u1, double h1, const Vec2& u2, double h2) {
  const double det = cross(u1, u2);
  return {(h1 * u2.y - h2 * u1.y) / det, (u1.x * h2 - u2.x * h1) / det};
}

double scale_of(const ConvexDisc& disc) {
  double s = disc.diameter();
  for (const auto& v : disc.vertices()) s = std::max({s, std::abs(v.x), std::abs(v.y)});
  return s;
}

// Signed distance of p outside the polygon (max over edge half-planes).
double exteriority(const ConvexDisc& disc, const Vec2& p) {
  double worst = -1e300;
  for (std::size_t i = 0; i < disc.size(); ++i) {
    const Vec2 n = unit_at(disc.edge_normal(i));
    worst = std::max(worst, dot(n, p - disc[i]));
  }
  return worst;
}

}  // namespace

ConvexDisc::ConvexDisc(std::vector<Vec2> vertices) {
  for (const auto& v : vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw Error(ErrorKind::kInvalidArgument, "non-finite polygon vertex");
    }
  }
  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  const double tol = 1e-14 * std::max(scale, 1.0);

  std::vector<Vec2> pts;
  for (const auto& v : vertices) {
    if (pts.empty() || norm(v - pts.back()) > tol) pts.push_back(v);
  }
  while (pts.size() > 1 && norm(pts.front() - pts.back()) <= tol) pts.pop_back();
  if (signed_area_sign(pts) < 0.0) std::reverse(pts.begin(), pts.end());

  // Drop collinear corners until every turn is strictly to the left.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2& a = pts[(i + pts.size() - 1) % pts.size()];
      const Vec2& b = pts[i];
      const Vec2& c = pts[(i + 1) % pts.size()];
      const double turn = cross(b - a, c - b);
      if (std::abs(turn) <= tol * std::max(norm(b - a), norm(c - b))) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (turn < 0.0) throw Error(ErrorKind::kInvalidArgument, "polygon is not convex");
    }
  }
  if (pts.size() < 3) {
    throw Error(ErrorKind::kInvalidArgument, "polygon needs at least three corners");
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 e0 = pts[i] - pts[(i + pts.size() - 1) % pts.size()];
    const Vec2 e1 = pts[(i + 1) % pts.size()] - pts[i];
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw Error(ErrorKind::kInvalidArgument, "polygon is not simple");
  }

  vertices_ = std::move(pts);
  edge_normals_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec2 e = vertices_[(i + 1) % vertices_.size()] - vertices_[i];
    edge_normals_[i] = wrap(std::atan2(-e.x, e.y));
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      diameter_ = std::max(diameter_, distance(vertices_[i], vertices_[j]));
    }
  }
}

double ConvexDisc::signed_area_sign(const std::vector<Vec2>& pts) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) s += cross(pts[i], pts[(i + 1) % pts.size()]);
  return s;
}

ConvexDisc regular_polygon(int sides, double circumradius, double phase) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    pts.push_back(unit_at(phase + kTwoPi * i / sides) * circumradius);
  }
  return ConvexDisc(std::move(pts));
}

SupportLine support_line(const ConvexDisc& disc, double normal_angle) {
  const Vec2 u = unit_at(normal_angle);
  const std::size_t m = disc.size();
  std::size_t best = 0;
  double h = dot(u, disc[0]);
  for (std::size_t i = 1; i < m; ++i) {
    const double v = dot(u, disc[i]);
    if (v > h) {
      h = v;
      best = i;
    }
  }
  const double tol = 1e-12 * scale_of(disc);
  SupportLine s{euclid::Line{u, h}, best, best};
  const std::size_t prev = (best + m - 1) % m, next = (best + 1) % m;
  if (dot(u, disc[prev]) >= h - tol) {
    s.first = prev;
  } else if (dot(u, disc[next]) >= h - tol) {
    s.last = next;
  }
  return s;
}

namespace {

Vec2 nearest_contact(const ConvexDisc& disc, const SupportLine& s, const Vec2& apex) {
  const Vec2& a = disc[s.first];
  const Vec2& b = disc[s.last];
  return distance(a, apex) <= distance(b, apex) ? a : b;
}

}  // namespace

Cap cap_from_normals(const ConvexDisc& disc, double normal1, double normal2) {
  if (std::abs(std::sin(normal2 - normal1)) <= 1e-9) {
    throw Error(ErrorKind::kDegenerate, "degenerate cap: parallel supporting lines");
  }
  const SupportLine s1 = support_line(disc, normal1);
  const SupportLine s2 = support_line(disc, normal2);
  Cap cap;
  cap.apex = intersect(s1.line.normal, s1.line.offset, s2.line.normal, s2.line.offset);
  if (!(exteriority(disc, cap.apex) > 1e-12 * scale_of(disc))) {
    throw Error(ErrorKind::kDegenerate, "degenerate cap: apex is not outside the disc");
  }
  cap.contact1 = nearest_contact(disc, s1, cap.apex);
  cap.contact2 = nearest_contact(disc, s2, cap.apex);
  cap.side1 = distance(cap.apex, cap.contact1);
  cap.side2 = distance(cap.apex, cap.contact2);
  cap.angle = kPi - angle_between(s1.line.normal, s2.line.normal);
  cap.normal1 = wrap(normal1);
  cap.normal2 = wrap(normal2);
  return cap;
}

Cap cap_from_apex(const ConvexDisc& disc, const Vec2& apex) {
  if (!(exteriority(disc, apex) > 1e-12 * scale_of(disc))) {
    throw Error(ErrorKind::kDegenerate, "degenerate cap: apex is not outside the disc");
  }
  Vec2 centroid;
  for (const auto& v : disc.vertices()) centroid = centroid + v;
  centroid = centroid / static_cast<double>(disc.size());
  const Vec2 ref = centroid - apex;
  std::size_t lo = 0, hi = 0;
  double alo = 1e300, ahi = -1e300;
  for (std::size_t i = 0; i < disc.size(); ++i) {
    const Vec2 w = disc[i] - apex;
    const double a = std::atan2(cross(ref, w), dot(ref, w));
    if (a < alo) alo = a, lo = i;
    if (a > ahi) ahi = a, hi = i;
  }
  // The disc lies counterclockwise of the ray to disc[lo] and clockwise of
  // the ray to disc[hi]; outward normals point away from it.
  const Vec2 wlo = disc[lo] - apex, whi = disc[hi] - apex;
  const Vec2 nlo = -perp(wlo), nhi = perp(whi);
  return cap_from_normals(disc, std::atan2(nlo.y, nlo.x), std::atan2(nhi.y, nhi.x));
}

bool is_isosceles(const Cap& cap, double tol) {
  return std::abs(cap.side1 - cap.side2) <= tol * (cap.side1 + cap.side2);
}

Cap cap_at(const ConvexDisc& disc, double axis, double angle) {
  const double half = (kPi - angle) / 2.0;
  return cap_from_normals(disc, axis + half, axis - half);
}

namespace {

// Cap with both contacts pinned to given vertices, valid on one continuity
// piece of the axis parameter.
struct PieceCap {
  Vec2 apex;
  double diff;
};

PieceCap piece_cap(const Vec2& v1, const Vec2& v2, double axis, double half) {
  const Vec2 u1 = unit_at(axis + half), u2 = unit_at(axis - half);
  const Vec2 apex = intersect(u1, dot(u1, v1), u2, dot(u2, v2));
  return {apex, distance(apex, v1) - distance(apex, v2)};
}

Vec2 point_at_distance(const Vec2& apex, const Vec2& a, const Vec2& b, double dist) {
  const Vec2& far = distance(apex, a) >= distance(apex, b) ? a : b;
  return apex + normalized(far - apex) * dist;
}

}  // namespace

Cap find_isosceles_cap(const ConvexDisc& disc, double angle, double tol) {
  if (!(angle > 0.0 && angle < kPi)) {
    throw Error(ErrorKind::kInvalidArgument, "cap angle must lie in (0, pi)");
  }
  const double half = (kPi - angle) / 2.0;
  const double target = tol * disc.diameter();

  // f(axis) = side1 - side2 jumps only where a supporting line runs along an
  // edge; between those breakpoints it is continuous and monotone.
  std::vector<double> breaks;
  for (std::size_t i = 0; i < disc.size(); ++i) {
    breaks.push_back(wrap(disc.edge_normal(i) - half));
    breaks.push_back(wrap(disc.edge_normal(i) + half));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return b - a < 1e-15; }),
               breaks.end());

  const std::size_t nb = breaks.size();
  for (std::size_t k = 0; k < nb; ++k) {
    const double lo = breaks[k];
    const double hi = k + 1 < nb ? breaks[k + 1] : breaks[0] + kTwoPi;
    const double mid = 0.5 * (lo + hi);
    const SupportLine s1 = support_line(disc, mid + half);
    const SupportLine s2 = support_line(disc, mid - half);
    if (s1.is_edge() || s2.is_edge() || s1.first == s2.first) continue;
    const Vec2& v1 = disc[s1.first];
    const Vec2& v2 = disc[s2.first];
    double a = lo, b = hi;
    double fa = piece_cap(v1, v2, a, half).diff;
    const double fb = piece_cap(v1, v2, b, half).diff;
    if (fa * fb > 0.0) continue;
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = piece_cap(v1, v2, m, half).diff;
      if ((fm <= 0.0) == (fa <= 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    const double axis = 0.5 * (a + b);
    const PieceCap pc = piece_cap(v1, v2, axis, half);
    if (std::abs(pc.diff) > target) continue;
    Cap cap;
    cap.apex = pc.apex;
    cap.contact1 = v1;
    cap.contact2 = v2;
    cap.side1 = distance(pc.apex, v1);
    cap.side2 = distance(pc.apex, v2);
    cap.angle = angle;
    cap.normal1 = wrap(axis + half);
    cap.normal2 = wrap(axis - half);
    return cap;
  }

  // No continuous root: the side difference changes sign across a jump. At the
  // jump a supporting line lies along an edge, and any point of that edge is a
  // tangency point, so pick the one that equalizes the sides.
  for (const double axis : breaks) {
    const SupportLine s1 = support_line(disc, axis + half);
    const SupportLine s2 = support_line(disc, axis - half);
    const Vec2 apex = intersect(s1.line.normal, s1.line.offset, s2.line.normal, s2.line.offset);
    if (!(exteriority(disc, apex) > 1e-12 * scale_of(disc))) continue;
    const double lo1 = std::min(distance(apex, disc[s1.first]), distance(apex, disc[s1.last]));
    const double hi1 = std::max(distance(apex, disc[s1.first]), distance(apex, disc[s1.last]));
    const double lo2 = std::min(distance(apex, disc[s2.first]), distance(apex, disc[s2.last]));
    const double hi2 = std::max(distance(apex, disc[s2.first]), distance(apex, disc[s2.last]));
    const double side = std::max(lo1, lo2);
    if (side > std::min(hi1, hi2) + target) continue;
    Cap cap;
    cap.apex = apex;
    cap.contact1 = point_at_distance(apex, disc[s1.first], disc[s1.last], std::min(side, hi1));
    cap.contact2 = point_at_distance(apex, disc[s2.first], disc[s2.last], std::min(side, hi2));
    cap.side1 = distance(apex, cap.contact1);
    cap.side2 = distance(apex, cap.contact2);
    cap.angle = angle;
    cap.normal1 = wrap(axis + half);
    cap.normal2 = wrap(axis - half);
    return cap;
  }
  throw Error(ErrorKind::kSearchFailed,
              "search failed: no isosceles cap of angle " + std::to_string(angle));
}

std::vector<Cap> non_isosceles_candidates(const ConvexDisc& disc, double margin,
                                          const CapGrid& grid, std::size_t limit) {
  // Irrational offset keeps grid normals off exact edge normals.
  constexpr double kOffset = 0.6180339887498949e-3;
  std::vector<Cap> found;
  for (int ia = 0; ia < grid.angles; ++ia) {
    const double angle =
        grid.min_angle + (grid.max_angle - grid.min_angle) * (ia + 0.5) / grid.angles;
    for (int id = 0; id < grid.directions; ++id) {
      const double axis = kTwoPi * (id + 0.5) / grid.directions + kOffset;
      Cap cap;
      try {
        cap = cap_at(disc, axis, angle);
      } catch (const Error&) {
        continue;
      }
      if (relative_difference(cap) > margin) found.push_back(cap);
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Cap& a, const Cap& b) {
    return relative_difference(a) > relative_difference(b);
  });
  if (found.size() > limit) found.resize(limit);
  return found;
}

std::optional<Cap> find_non_isosceles_cap(const ConvexDisc& disc, double margin,
                                          const CapGrid& grid) {
  auto found = non_isosceles_candidates(disc, margin, grid, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace discsep::caps
