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

#include "discsep/nonseparable.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "discsep/error.hpp"
#include "discsep/polygon2d.hpp"

namespace discsep::nonsep {

namespace {

constexpr double kMinBeta = 1e-3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double signed_angle(const Vec2& from, const Vec2& to) {
  return std::atan2(cross(from, to), dot(from, to));
}

// Candidate caps, best first, with caps whose short side is at least 5% of
// the diameter moved ahead of the rest.
std::vector<caps::Cap> ordered_candidates(const caps::ConvexDisc& disc) {
  auto found = caps::non_isosceles_candidates(disc, 1e-3, {}, 100000);
  if (found.empty()) throw Error(ErrorKind::kSearchFailed, "disc too circular");
  std::stable_partition(found.begin(), found.end(), [&](const caps::Cap& c) {
    return std::min(c.side1, c.side2) >= 0.05 * disc.diameter();
  });
  return found;
}

}  // namespace

std::vector<Vec2> PlacedDisc::vertices() const {
  std::vector<Vec2> out;
  out.reserve(base.size());
  for (const auto& p : base) out.push_back(map(p));
  return out;
}

ConstructionParams params_from_cap(const caps::ConvexDisc& disc, const caps::Cap& cap) {
  ConstructionParams p;
  p.cap = cap;
  if (p.cap.side1 < p.cap.side2) {
    std::swap(p.cap.contact1, p.cap.contact2);
    std::swap(p.cap.side1, p.cap.side2);
    std::swap(p.cap.normal1, p.cap.normal2);
  }
  const double ep = p.cap.side1, fp = p.cap.side2;
  if (!(ep > fp)) throw Error(ErrorKind::kInvalidArgument, "cap is isosceles");
  p.alpha = p.cap.angle;
  p.n = static_cast<int>(std::floor(kTwoPi / p.alpha));
  while ((p.n + 1) * p.alpha <= kTwoPi) ++p.n;
  while (p.n * p.alpha > kTwoPi) --p.n;
  p.beta = kTwoPi - p.n * p.alpha;
  if (p.beta <= kMinBeta) {
    throw Error(ErrorKind::kDegenerate, "beta " + fmt(p.beta) + " too small for alpha " +
                                            fmt(p.alpha));
  }
  p.epsilon = (ep - fp) / 2.0;
  p.beta_cap = caps::find_isosceles_cap(disc, p.beta);
  p.beta_side = (fp + ep - p.epsilon) / 2.0;
  p.scale = p.beta_side / p.beta_cap.side1;
  const Vec2 ue = normalized(p.cap.contact1 - p.cap.apex);
  const Vec2 uf = normalized(p.cap.contact2 - p.cap.apex);
  p.orientation = cross(uf, ue) > 0.0 ? 1 : -1;
  return p;
}

ConstructionParams plan_construction(const caps::ConvexDisc& disc) {
  const auto candidates = ordered_candidates(disc);
  for (const auto& cap : candidates) {
    try {
      return params_from_cap(disc, cap);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::kSearchFailed, "no usable non-isosceles cap");
}

RingPolygon build_ring_polygon(const ConstructionParams& params) {
  const int n = params.n;
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  const double eps = params.epsilon;
  const auto infeasible = [&] {
    return Error(ErrorKind::kSearchFailed, "ring infeasible: alpha=" + fmt(params.alpha) +
                                               " beta=" + fmt(params.beta) +
                                               " n=" + std::to_string(n));
  };

  RingPolygon ring;
  ring.exterior_angles.assign(m, params.alpha);
  ring.exterior_angles[m - 1] = params.beta;
  ring.directions.resize(m);
  ring.directions[0] = {1.0, 0.0};
  for (std::size_t k = 1; k < m; ++k) {
    ring.directions[k] =
        rotated(ring.directions[k - 1], params.orientation * ring.exterior_angles[k]);
  }

  // Closure: A s = 0 with A = [cos; sin] of the edge directions.
  double g00 = 0, g01 = 0, g11 = 0;
  for (const auto& d : ring.directions) {
    g00 += d.x * d.x;
    g01 += d.x * d.y;
    g11 += d.y * d.y;
  }
  const double det = g00 * g11 - g01 * g01;
  if (!(det > 1e-12)) throw infeasible();
  const auto project = [&](std::vector<double>& s) {
    Vec2 r;
    for (std::size_t k = 0; k < m; ++k) r = r + ring.directions[k] * s[k];
    const Vec2 lam{(g11 * r.x - g01 * r.y) / det, (g00 * r.y - g01 * r.x) / det};
    for (std::size_t k = 0; k < m; ++k) s[k] -= dot(ring.directions[k], lam);
  };
  const double lo = eps / 10.0, hi = eps / 2.0;
  const auto in_bounds = [&](const std::vector<double>& s) {
    return std::all_of(s.begin(), s.end(), [&](double v) { return v > lo && v < hi; });
  };

  std::vector<double> s(m, eps / 4.0);
  project(s);
  if (!in_bounds(s)) {
    // Dykstra projections between a shrunken box and the closure subspace.
    const double blo = lo + 0.05 * (hi - lo), bhi = hi - 0.05 * (hi - lo);
    std::vector<double> x(m, eps / 4.0), p(m, 0.0), q(m, 0.0), y(m);
    for (int it = 0; it < 20000; ++it) {
      for (std::size_t k = 0; k < m; ++k) {
        y[k] = std::clamp(x[k] + p[k], blo, bhi);
        p[k] = x[k] + p[k] - y[k];
      }
      std::vector<double> z(m);
      for (std::size_t k = 0; k < m; ++k) z[k] = y[k] + q[k];
      project(z);
      for (std::size_t k = 0; k < m; ++k) {
        q[k] = y[k] + q[k] - z[k];
        x[k] = z[k];
      }
      if (in_bounds(x)) break;
    }
    s = x;
    if (!in_bounds(s)) throw infeasible();
  }

  Vec2 residual;
  for (std::size_t k = 0; k < m; ++k) residual = residual + ring.directions[k] * s[k];
  if (norm(residual) > 1e-9 * eps) throw infeasible();

  ring.side_lengths = s;
  ring.vertices.resize(m);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    ring.vertices[k + 1] = ring.vertices[k] + ring.directions[k] * s[k];
  }
  return ring;
}

double polygon_gap(std::span<const Vec2> a, std::span<const Vec2> b) {
  const auto axis_gap = [](std::span<const Vec2> p, std::span<const Vec2> q) {
    // Largest gap along the outward edge normals of p.
    double best = -1e300;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vec2 e = p[(i + 1) % p.size()] - p[i];
      const Vec2 nrm = normalized(Vec2{e.y, -e.x});
      double pmax = -1e300, qmin = 1e300;
      for (const auto& v : p) pmax = std::max(pmax, dot(nrm, v));
      for (const auto& v : q) qmin = std::min(qmin, dot(nrm, v));
      best = std::max(best, qmin - pmax);
    }
    return best;
  };
  const double sat = std::max(axis_gap(a, b), axis_gap(b, a));
  if (sat <= 0.0) return sat;
  const auto point_segment = [](const Vec2& p, const Vec2& u, const Vec2& v) {
    const Vec2 e = v - u;
    const double t = std::clamp(dot(p - u, e) / norm2(e), 0.0, 1.0);
    return distance(p, u + e * t);
  };
  double best = 1e300;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, point_segment(a[i], b[j], b[(j + 1) % b.size()]));
      best = std::min(best, point_segment(b[j], a[i], a[(i + 1) % a.size()]));
    }
  }
  return best;
}

std::vector<PlacedDisc> place_copies(const caps::ConvexDisc& disc,
                                     const ConstructionParams& params,
                                     const RingPolygon& ring) {
  const std::size_t m = ring.vertices.size();
  const std::vector<Vec2> base(disc.vertices().begin(), disc.vertices().end());
  const auto place = [&](const caps::Cap& cap, const Vec2& e, const Vec2& f, double scale,
                         std::size_t k) {
    const Vec2 ue = normalized(e - cap.apex), uf = normalized(f - cap.apex);
    const Vec2& out = ring.directions[k];
    const Vec2& in = ring.directions[(k + m - 1) % m];
    PlacedDisc d;
    d.base = base;
    d.scale = scale;
    d.rotation = signed_angle(ue, out);
    d.translation = ring.vertices[k] - rotated(cap.apex * scale, d.rotation);
    if (norm(rotated(uf, d.rotation) - in) > 1e-9) {
      throw Error(ErrorKind::kDegenerate, "cap does not fit ring corner " + std::to_string(k));
    }
    return d;
  };

  std::vector<PlacedDisc> out;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    out.push_back(place(params.cap, params.cap.contact1, params.cap.contact2, 1.0, k));
  }
  const caps::Cap& bc = params.beta_cap;
  const bool keep = (cross(normalized(bc.contact2 - bc.apex), normalized(bc.contact1 - bc.apex)) >
                     0.0) == (params.orientation > 0);
  out.push_back(place(bc, keep ? bc.contact1 : bc.contact2, keep ? bc.contact2 : bc.contact1,
                      params.scale, m - 1));

  std::vector<std::vector<Vec2>> world;
  for (const auto& d : out) world.push_back(d.vertices());
  for (std::size_t i = 0; i < world.size(); ++i) {
    for (std::size_t j = i + 1; j < world.size(); ++j) {
      const double gap = polygon_gap(world[i], world[j]);
      if (!(gap > 0.0)) {
        throw Error(ErrorKind::kDegenerate, "construction overlap: discs " + std::to_string(i) +
                                                " and " + std::to_string(j) +
                                                ", penetration depth " + fmt(-gap));
      }
    }
  }
  return out;
}

namespace {

// Lines a.x = c with |a|_inf = 1, parametrized by (t, c) in four charts:
// a = (±1, t) or (t, ±1) with t in [-1, 1].
struct Chart {
  bool t_is_x;
  double sign;

  // Half-plane {(t, c) : a.p - c <= rhs} for the given sign of the inequality.
  void le(LabeledPolygon& poly, const Vec2& p, double rhs) const {
    const Vec2 nrm = t_is_x ? Vec2{p.x, -1.0} : Vec2{p.y, -1.0};
    const double fixed = t_is_x ? sign * p.y : sign * p.x;
    poly = clip_polygon(poly, nrm, rhs - fixed, 0, 0.0);
  }
  // {(t, c) : a.p - c >= rhs}
  void ge(LabeledPolygon& poly, const Vec2& p, double rhs) const {
    const Vec2 nrm = t_is_x ? Vec2{-p.x, 1.0} : Vec2{-p.y, 1.0};
    const double fixed = t_is_x ? sign * p.y : sign * p.x;
    poly = clip_polygon(poly, nrm, -rhs + fixed, 0, 0.0);
  }
};

constexpr std::array<Chart, 4> kCharts{{{true, 1.0}, {true, -1.0}, {false, 1.0}, {false, -1.0}}};

bool has_interior(const LabeledPolygon& poly) {
  return !poly.empty() && signed_area(poly.points) > 0.0;
}

double coordinate_bound(std::span<const Vec2> a, std::span<const Vec2> b,
                        std::span<const Vec2> c) {
  double m = 1.0;
  for (auto span : {a, b, c}) {
    for (const auto& p : span) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  }
  return 4.0 * m;
}

// Strict separation region of one chart: first below, second above.
LabeledPolygon separation_region(const Chart& chart, std::span<const Vec2> first,
                                 std::span<const Vec2> second, double bound, double delta) {
  LabeledPolygon poly = make_rectangle(-1.0, -bound, 1.0, bound, 0);
  for (const auto& p : first) {
    chart.le(poly, p, -delta);
    if (poly.empty()) return poly;
  }
  for (const auto& q : second) {
    chart.ge(poly, q, delta);
    if (poly.empty()) return poly;
  }
  return poly;
}

}  // namespace

bool separating_line_feasible(std::span<const Vec2> first, std::span<const Vec2> second,
                              std::span<const Vec2> ring, double delta) {
  const double bound = coordinate_bound(first, second, ring);
  for (const auto& chart : kCharts) {
    const LabeledPolygon region = separation_region(chart, first, second, bound, delta);
    if (!has_interior(region)) continue;
    if (ring.empty()) return true;
    for (const auto& r : ring) {
      LabeledPolygon poly = region;
      chart.le(poly, r, 0.0);
      if (has_interior(poly)) return true;
    }
  }
  return false;
}

bool separating_line_avoiding_ring(std::span<const Vec2> first,
                                   std::span<const Vec2> second,
                                   std::span<const Vec2> ring, double delta) {
  const double bound = coordinate_bound(first, second, ring);
  for (const auto& chart : kCharts) {
    const LabeledPolygon region = separation_region(chart, first, second, bound, delta);
    if (!has_interior(region)) continue;
    LabeledPolygon below = region, above = region;
    for (const auto& r : ring) {
      chart.le(below, r, -delta);
      chart.ge(above, r, delta);
    }
    if (has_interior(below) || has_interior(above)) return true;
  }
  return false;
}

Certificate certify_nonseparable(std::span<const std::vector<Vec2>> discs,
                                 std::span<const Vec2> ring) {
  Certificate cert;
  double scale = 1.0;
  for (const auto& d : discs) {
    for (const auto& p : d) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  }
  const double delta = 1e-9 * scale;
  const int count = static_cast<int>(discs.size());
  cert.passed = count >= 2;
  for (int k = 0; k < count && count >= 2; ++k) {
    PairStatus st;
    st.first = k;
    st.second = (k + 1) % count;
    st.separable = separating_line_feasible(discs[static_cast<std::size_t>(st.first)],
                                            discs[static_cast<std::size_t>(st.second)],
                                            ring, delta);
    cert.passed = cert.passed && !st.separable;
    cert.pairs.push_back(st);
  }
  cert.note =
      "Each listed pair (k, k+1) is LP-infeasible when no line strictly separates "
      "disc k from disc k+1 while leaving a ring vertex on the side of disc k. "
      "This certifies the ring obstruction for these coordinates only; it is not "
      "a machine proof that no separating tiling exists.";
  return cert;
}

Construction build_counterexample(const caps::ConvexDisc& disc) {
  const auto candidates = ordered_candidates(disc);
  std::string last = "no usable non-isosceles cap";
  for (const auto& cap : candidates) {
    try {
      Construction c;
      c.params = params_from_cap(disc, cap);
      c.ring = build_ring_polygon(c.params);
      c.discs = place_copies(disc, c.params, c.ring);
      std::vector<std::vector<Vec2>> world;
      for (const auto& d : c.discs) world.push_back(d.vertices());
      c.certificate = certify_nonseparable(world, c.ring.vertices);
      return c;
    } catch (const Error& e) {
      last = e.what();
    }
  }
  throw Error(ErrorKind::kSearchFailed, "construction failed for every candidate cap: " + last);
}

}  // namespace discsep::nonsep
