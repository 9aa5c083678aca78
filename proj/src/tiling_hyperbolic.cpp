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

// Hyperbolic cells are clipped in the Klein disc, where geodesics are
// straight chords and <X, n> <= 0 becomes n1 k1 + n2 k2 <= n0. The planar
// polygon starts as a square enclosing the disc; its trace on the circle at
// infinity becomes the ideal part of the cell.

#include <algorithm>
#include <string>

#include "discsep/error.hpp"
#include "discsep/polygon2d.hpp"
#include "discsep/tiling.hpp"
#include "tiling_internal.hpp"

namespace discsep {

namespace {

constexpr int kOuterBox = -100;
constexpr double kKleinEps = 1e-13;

struct KleinLine {
  Vec2 normal;
  double offset;
};

KleinLine to_klein_line(const hyper::Geodesic& g) {
  const Vec2 a{g.normal.y, g.normal.z};
  const double len = norm(a);
  return {a / len, g.normal.x / len};
}

LabeledPolygon klein_polygon(const std::vector<HConstraint>& constraints) {
  LabeledPolygon poly = make_rectangle(-2.0, -2.0, 2.0, 2.0, kOuterBox);
  for (std::size_t k = 0; k < constraints.size() && !poly.empty(); ++k) {
    const KleinLine l = to_klein_line(constraints[k].geodesic);
    poly = clip_polygon(poly, l.normal, l.offset, static_cast<int>(k), kKleinEps);
  }
  return poly;
}

// Roots t of |a + t d| = radius, ascending; false when the line misses.
bool circle_roots(const Vec2& a, const Vec2& d, double radius, double& t0, double& t1) {
  const double qa = norm2(d);
  const double qb = dot(a, d);
  const double qc = norm2(a) - radius * radius;
  const double disc = qb * qb - qa * qc;
  if (qa == 0.0 || disc <= 0.0) return false;
  const double s = std::sqrt(disc);
  // Stable quadratic roots.
  const double q = qb >= 0.0 ? -(qb + s) : -(qb - s);
  double r0 = q / qa, r1 = q == 0.0 ? -r0 : qc / q;
  if (r0 > r1) std::swap(r0, r1);
  t0 = r0;
  t1 = r1;
  return true;
}

KleinRegion region_of(const LabeledPolygon& poly, double radius) {
  KleinRegion region;
  if (poly.empty()) {
    region.empty = true;
    return region;
  }
  const double r2 = radius * radius;
  const std::size_t n = poly.points.size();
  std::vector<Vec2> pts;
  std::vector<int> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.points[i];
    const Vec2& b = poly.points[(i + 1) % n];
    const int label = poly.edges[i];
    const bool in_a = norm2(a) < r2, in_b = norm2(b) < r2;
    double t0 = 0.0, t1 = 0.0;
    const bool hit = circle_roots(a, b - a, radius, t0, t1);
    auto on_circle = [&](double t) {
      const Vec2 p = a + (b - a) * t;
      return p * (radius / norm(p));
    };
    if (in_a) {
      pts.push_back(a);
      edges.push_back(label);
      if (!in_b && hit) {
        pts.push_back(on_circle(std::clamp(t1, 0.0, 1.0)));
        edges.push_back(kIdealArc);
      }
    } else if (in_b) {
      if (hit) {
        pts.push_back(on_circle(std::clamp(t0, 0.0, 1.0)));
        edges.push_back(label);
      }
    } else if (hit && t0 > 0.0 && t1 < 1.0 && t1 > t0) {
      pts.push_back(on_circle(t0));
      edges.push_back(label);
      pts.push_back(on_circle(t1));
      edges.push_back(kIdealArc);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts.size() > 1 && norm(pts[i] - pts[(i + 1) % pts.size()]) <= 1e-15) continue;
    region.points.push_back(pts[i]);
    region.edges.push_back(edges[i]);
  }
  if (region.points.empty()) {
    // No boundary inside the disc: it is either entirely in or entirely out.
    bool origin_in = true;
    for (std::size_t i = 0; i < n && origin_in; ++i) {
      origin_in = cross(poly.points[(i + 1) % n] - poly.points[i], -poly.points[i]) >= 0.0;
    }
    region.full_disc = origin_in;
    region.empty = !origin_in;
  }
  return region;
}

void finalize(ConvexCellH& cell, const LabeledPolygon& poly) {
  const KleinRegion region = region_of(poly, 1.0);
  cell.vertices.clear();
  cell.edges.clear();
  cell.empty = region.empty;
  if (region.empty) {
    cell.unbounded = false;
    return;
  }
  if (region.full_disc) {
    cell.unbounded = true;
    return;
  }
  bool unbounded = false;
  for (std::size_t i = 0; i < region.points.size(); ++i) {
    const Vec2& k = region.points[i];
    HVertex v;
    v.klein = k;
    // Points produced by the circle intersection are exactly unit length.
    v.ideal = norm2(k) >= 1.0 - 1e-15;
    if (!v.ideal) v.point = hyper::from_klein(k);
    unbounded = unbounded || v.ideal;
    cell.vertices.push_back(v);
    cell.edges.push_back(region.edges[i]);
  }
  cell.unbounded = unbounded;
}

double interior_angle(const hyper::Point& v, const hyper::Point& u, const hyper::Point& w) {
  // Tangent vectors at v towards u and w.
  const Vec3 t1 = u + v * minkowski(v, u);
  const Vec3 t2 = w + v * minkowski(v, w);
  const double c = minkowski(t1, t2) / std::sqrt(minkowski(t1, t1) * minkowski(t2, t2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

ConvexCellH whole_plane_cell(int owner) {
  ConvexCellH cell;
  cell.owner = owner;
  cell.unbounded = true;
  return cell;
}

ConvexCellH clip_cell(const ConvexCellH& cell, const hyper::Geodesic& geodesic, int other) {
  ConvexCellH out = cell;
  out.constraints.push_back({geodesic, other});
  finalize(out, klein_polygon(out.constraints));
  return out;
}

KleinRegion klein_region(const ConvexCellH& cell, double radius) {
  return region_of(klein_polygon(cell.constraints), radius);
}

double triangle_area(const hyper::Point& a, const hyper::Point& b, const hyper::Point& c) {
  // tan(A/2) = |det(a,b,c)| / (1 + cosh ab + cosh bc + cosh ca)
  const double det = dot(a, cross(b, c));
  const double den = 1.0 - minkowski(a, b) - minkowski(b, c) - minkowski(c, a);
  return 2.0 * std::atan2(std::abs(det), den);
}

double cell_area(const ConvexCellH& cell) {
  if (cell.empty) return 0.0;
  if (cell.unbounded) throw Error(ErrorKind::kDegenerate, "unbounded");
  const std::size_t k = cell.vertices.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += interior_angle(cell.vertices[i].point, cell.vertices[(i + k - 1) % k].point,
                          cell.vertices[(i + 1) % k].point);
  }
  return static_cast<double>(k - 2) * kPi - sum;
}

double cell_area_clipped(const ConvexCellH& cell, double clip_radius) {
  if (cell.empty) return 0.0;
  const double rho = std::tanh(clip_radius);
  const double sector = std::cosh(clip_radius) - 1.0;
  const KleinRegion region = klein_region(cell, rho);
  if (region.empty) return 0.0;
  if (region.full_disc) return kTwoPi * sector;

  // Signed fan from the origin: geodesic triangles for chords, circular
  // sectors for arcs of the clip circle.
  double area = 0.0;
  const std::size_t k = region.points.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2& p = region.points[i];
    const Vec2& q = region.points[(i + 1) % k];
    if (region.edges[i] == kIdealArc) {
      double phi = std::atan2(cross(p, q), dot(p, q));
      if (phi < 0.0) phi += kTwoPi;
      if (k == 1) phi = kTwoPi;
      area += sector * phi;
    } else {
      const double c = cross(p, q);
      if (c == 0.0) continue;
      const double t = triangle_area(hyper::kOrigin, hyper::from_klein(p), hyper::from_klein(q));
      area += c > 0.0 ? t : -t;
    }
  }
  return area;
}

void validate_packing(std::span<const hyper::Disc> discs) {
  for (const auto& d : discs) hyper::validate(d);
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const double gap = hyper::distance(discs[i].center, discs[j].center) -
                         discs[i].radius - discs[j].radius;
      if (!(gap > internal::kMinClearance)) {
        throw Error(ErrorKind::kNotAPacking, internal::overlap_message(i, j));
      }
    }
  }
}

double default_clip_radius(std::span<const hyper::Disc> discs) {
  double far = 0.0, big = 0.0;
  for (const auto& d : discs) {
    far = std::max(far, hyper::distance(hyper::kOrigin, d.center));
    big = std::max(big, d.radius);
  }
  return far + big + 2.0;
}

HyperbolicTiling build_hyperbolic_diagram(std::span<const hyper::Disc> discs,
                                          double clip_radius) {
  validate_packing(discs);
  HyperbolicTiling tiling;
  tiling.clip_radius = clip_radius > 0.0 ? clip_radius : default_clip_radius(discs);
  tiling.cells.reserve(discs.size());
  for (std::size_t i = 0; i < discs.size(); ++i) {
    ConvexCellH cell = whole_plane_cell(static_cast<int>(i));
    LabeledPolygon poly = make_rectangle(-2.0, -2.0, 2.0, 2.0, kOuterBox);
    for (std::size_t j = 0; j < discs.size(); ++j) {
      if (j == i) continue;
      const hyper::Geodesic g = hyper::bisector_unchecked(discs[i], discs[j]);
      const int label = static_cast<int>(cell.constraints.size());
      cell.constraints.push_back({g, static_cast<int>(j)});
      const KleinLine l = to_klein_line(g);
      poly = clip_polygon(poly, l.normal, l.offset, label, kKleinEps);
    }
    finalize(cell, poly);
    tiling.cells.push_back(std::move(cell));
  }
  return tiling;
}

int locate(const HyperbolicTiling& tiling, const hyper::Point& x, double tol) {
  int best = -1;
  for (const auto& cell : tiling.cells) {
    if (best >= 0 && cell.owner > best) continue;
    const bool inside = std::all_of(
        cell.constraints.begin(), cell.constraints.end(),
        [&](const HConstraint& c) { return c.geodesic.eval(x) <= tol * x.x; });
    if (inside) best = cell.owner;
  }
  return best;
}

namespace {

double klein_eval(const hyper::Geodesic& g, const Vec2& k) {
  const KleinLine l = to_klein_line(g);
  return dot(l.normal, k) - l.offset;
}

// Is the whole cell inside {<X, n> >= -tol}, judged in the Klein disc?
bool cell_above(const ConvexCellH& cell, const hyper::Geodesic& g, double tol) {
  if (cell.empty) return true;
  const KleinRegion region = klein_region(cell, 1.0);
  if (region.full_disc) return false;
  const std::size_t k = region.points.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (klein_eval(g, region.points[i]) < -tol) return false;
    if (region.edges[i] == kIdealArc) {
      const Vec2& p = region.points[i];
      const Vec2& q = region.points[(i + 1) % k];
      double phi = std::atan2(cross(p, q), dot(p, q));
      if (phi < 0.0) phi += kTwoPi;
      for (int s = 1; s < 64; ++s) {
        if (klein_eval(g, rotated(p, phi * s / 64.0)) < -tol) return false;
      }
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_separating_tiling(std::span<const hyper::Disc> discs,
                                      const HyperbolicTiling& tiling, double tol) {
  using internal::fail;
  if (auto r = internal::check_owners(tiling.cells, discs.size()); !r.passed) return r;

  for (const auto& cell : tiling.cells) {
    int count = 0, found = -1;
    for (std::size_t j = 0; j < discs.size(); ++j) {
      const bool in = std::all_of(
          cell.constraints.begin(), cell.constraints.end(), [&](const HConstraint& c) {
            // sinh of the distance from the center to the geodesic.
            return std::asinh(-c.geodesic.eval(discs[j].center)) >= discs[j].radius - tol;
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

  for (const auto& cell : tiling.cells) {
    const std::string tag = "cell " + std::to_string(cell.owner);
    if (cell.empty) return fail(cell.owner, tag + " is empty");
    const std::size_t k = cell.vertices.size();
    const int nc = static_cast<int>(cell.constraints.size());
    if (cell.edges.size() != k) return fail(cell.owner, tag + " has a malformed vertex loop");
    if (k == 0 && nc != 0) {
      // Only the whole plane has no vertices; check it is really unconstrained
      // inside the model.
      if (!klein_region(cell, 1.0).full_disc) {
        return fail(cell.owner, tag + " has constraints but no vertices");
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      const HVertex& v = cell.vertices[i];
      const HVertex& w = cell.vertices[(i + 1) % k];
      for (const auto& c : cell.constraints) {
        if (klein_eval(c.geodesic, v.klein) > tol) {
          return fail(cell.owner, tag + " has a vertex outside a constraint");
        }
      }
      const int e = cell.edges[i];
      if (e == kIdealArc) {
        if (!v.ideal || !w.ideal) return fail(cell.owner, tag + " has an ideal arc between finite vertices");
        continue;
      }
      if (e < 0 || e >= nc) return fail(cell.owner, tag + " has a dangling edge label");
      const auto& g = cell.constraints[e].geodesic;
      if (std::abs(klein_eval(g, v.klein)) > tol || std::abs(klein_eval(g, w.klein)) > tol) {
        return fail(cell.owner, tag + " has an edge off its geodesic");
      }
    }
  }

  const auto index = internal::index_by_other(tiling.cells, discs.size());
  for (std::size_t a = 0; a < tiling.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < tiling.cells.size(); ++b) {
      const auto& ca = tiling.cells[a];
      const auto& cb = tiling.cells[b];
      const int ia = index[a][cb.owner], ib = index[b][ca.owner];
      if (ia >= 0 && ib >= 0) {
        const Vec3& na = ca.constraints[ia].geodesic.normal;
        const Vec3& nb = cb.constraints[ib].geodesic.normal;
        if (norm(na + nb) <= tol * (1.0 + norm(na))) continue;
      }
      auto separates = [&](const ConvexCellH& p, const ConvexCellH& q) {
        return std::any_of(p.constraints.begin(), p.constraints.end(), [&](const HConstraint& c) {
          return cell_above(q, c.geodesic, tol);
        });
      };
      if (!separates(ca, cb) && !separates(cb, ca)) {
        return fail(ca.owner, "cells " + std::to_string(ca.owner) + " and " +
                                  std::to_string(cb.owner) + " overlap");
      }
    }
  }

  double total = 0.0;
  for (const auto& cell : tiling.cells) total += cell_area_clipped(cell, tiling.clip_radius);
  const double want = kTwoPi * (std::cosh(tiling.clip_radius) - 1.0);
  if (std::abs(total - want) > 1e-6 * want) {
    return fail(-1, "clipped cell areas sum to " + std::to_string(total) + ", expected " +
                        std::to_string(want));
  }
  return {};
}

}  // namespace discsep
