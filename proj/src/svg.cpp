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

#include "discsep/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

#include "discsep/error.hpp"

namespace discsep::svg {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int steps_for(double length) {
  return std::max(1, static_cast<int>(std::ceil(length / kMaxStep)));
}

// ---------------------------------------------------------------- sphere

struct View {
  Vec3 v, e1, e2;

  explicit View(const Vec3& dir) {
    if (!(norm(dir) > 0.0)) throw Error(ErrorKind::kInvalidArgument, "view direction is zero");
    v = normalized(dir);
    const Vec3 up = std::abs(v.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{0, 1, 0};
    e1 = normalized(cross(up, v));
    e2 = cross(v, e1);
  }
  Vec2 project(const Vec3& u) const { return {dot(u, e1), dot(u, e2)}; }
  bool visible(const Vec3& u) const { return dot(u, v) >= 0.0; }
};

bool in_cell(const ConvexCellS& cell, const Vec3& u, double tol) {
  return std::all_of(cell.constraints.begin(), cell.constraints.end(),
                     [&](const SConstraint& c) { return c.circle.eval(u) >= -tol; });
}

std::vector<Vec3> great_circle(const Vec3& m) {
  const Vec3 seed = std::abs(m.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 a = normalized(cross(m, seed));
  const Vec3 t = cross(m, a);
  std::vector<Vec3> out;
  const int k = steps_for(kTwoPi);
  for (int i = 0; i < k; ++i) {
    const double th = kTwoPi * i / k;
    out.push_back(a * std::cos(th) + t * std::sin(th));
  }
  return out;
}

std::vector<Vec3> sphere_boundary(const ConvexCellS& cell, const View& view) {
  std::vector<Vec3> out;
  switch (cell.kind) {
    case SCellKind::kEmpty:
      return out;
    case SCellKind::kFull:
      return great_circle(view.v);
    case SCellKind::kHemisphere:
      return great_circle(cell.constraints[static_cast<std::size_t>(cell.edges[0])].circle.normal);
    case SCellKind::kLune:
    case SCellKind::kPolygon:
      break;
  }
  const std::size_t k = cell.vertices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3& a = cell.vertices[i];
    const Vec3& b = cell.vertices[(i + 1) % k];
    const Vec3& m = cell.constraints[static_cast<std::size_t>(cell.edges[i])].circle.normal;
    const Vec3 t = cross(m, a);
    double end = std::atan2(dot(t, b), dot(a, b));
    if (end <= 0.0) end += kTwoPi;
    const int s = steps_for(end);
    for (int j = 0; j < s; ++j) {
      const double th = end * j / s;
      out.push_back(a * std::cos(th) + t * std::sin(th));
    }
  }
  return out;
}

// Part of the loop in the front hemisphere, with the horizon pieces sampled
// along the horizon circle.
std::vector<Vec3> clip_to_view(const std::vector<Vec3>& loop, const ConvexCellS& cell,
                               const View& view) {
  const std::size_t n = loop.size();
  if (n == 0) return {};
  if (std::all_of(loop.begin(), loop.end(), [&](const Vec3& u) { return view.visible(u); })) {
    return loop;
  }
  struct Pt {
    Vec3 u;
    bool horizon_start;
  };
  std::vector<Pt> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = loop[i];
    const Vec3& b = loop[(i + 1) % n];
    const double fa = dot(a, view.v), fb = dot(b, view.v);
    const auto cut = [&] {
      const double t = fa / (fa - fb);
      const Vec3 p = a + (b - a) * t;
      return normalized(p - view.v * dot(p, view.v));
    };
    if (fa >= 0.0) {
      pts.push_back({a, false});
      if (fb < 0.0) pts.push_back({cut(), true});
    } else if (fb >= 0.0) {
      pts.push_back({cut(), false});
    }
  }
  if (pts.empty()) return {};
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(pts[i].u);
    if (!pts[i].horizon_start) continue;
    const Vec3& a = pts[i].u;
    const Vec3& b = pts[(i + 1) % pts.size()].u;
    const double ta = std::atan2(dot(a, view.e2), dot(a, view.e1));
    double sweep = std::atan2(dot(b, view.e2), dot(b, view.e1)) - ta;
    while (sweep < 0.0) sweep += kTwoPi;
    const auto at = [&](double th) { return view.e1 * std::cos(th) + view.e2 * std::sin(th); };
    if (!in_cell(cell, at(ta + sweep / 2.0), 1e-9)) sweep -= kTwoPi;
    const int s = steps_for(std::abs(sweep));
    for (int j = 1; j < s; ++j) out.push_back(at(ta + sweep * j / s));
  }
  return out;
}

std::vector<Vec3> cap_boundary(const sphere::Disc& d) {
  const Vec3 seed = std::abs(d.center.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 a = normalized(cross(d.center, seed));
  const Vec3 b = cross(d.center, a);
  std::vector<Vec3> out;
  const int k = steps_for(kTwoPi);
  for (int i = 0; i <= k; ++i) {
    const double th = kTwoPi * i / k;
    out.push_back(d.center * std::cos(d.radius) +
                  (a * std::cos(th) + b * std::sin(th)) * std::sin(d.radius));
  }
  return out;
}

// ---------------------------------------------------------------- hyperbolic

double klein_radius(double clip_radius) { return std::min(std::tanh(clip_radius), 1.0 - 1e-9); }

std::vector<Vec2> klein_outline(const ConvexCellH& cell, double clip_radius) {
  const double rho = klein_radius(clip_radius);
  const KleinRegion region = klein_region(cell, rho);
  std::vector<Vec2> out;
  if (region.empty || cell.empty) return out;
  const auto arc = [&](double from, double sweep) {
    const int s = steps_for(sweep);
    for (int j = 0; j < s; ++j) out.push_back(unit_at(from + sweep * j / s) * rho);
  };
  if (region.full_disc) {
    arc(0.0, kTwoPi);
    return out;
  }
  const std::size_t n = region.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = region.points[i];
    const Vec2& b = region.points[(i + 1) % n];
    if (region.edges[i] == kIdealArc) {
      const double ta = std::atan2(a.y, a.x);
      double sweep = std::atan2(b.y, b.x) - ta;
      while (sweep <= 0.0) sweep += kTwoPi;
      arc(ta, sweep);
    } else {
      const int s = steps_for(distance(a, b));
      for (int j = 0; j < s; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / s));
    }
  }
  return out;
}

Vec3 boost(const hyper::Point& o, const Vec3& x) {
  // Lorentz boost taking the origin to o.
  const double c = o.x;
  const Vec2 s{o.y, o.z};
  const Vec2 xs{x.y, x.z};
  const double sx = dot(s, xs);
  const Vec2 sp = xs + s * (sx / (1.0 + c)) + s * x.x;
  return {c * x.x + sx, sp.x, sp.y};
}

std::vector<Vec2> hyperbolic_circle(const hyper::Disc& d) {
  std::vector<Vec2> out;
  const int k = steps_for(kTwoPi);
  for (int i = 0; i <= k; ++i) {
    const double th = kTwoPi * i / k;
    const Vec3 local{std::cosh(d.radius), std::sinh(d.radius) * std::cos(th),
                     std::sinh(d.radius) * std::sin(th)};
    out.push_back(hyper::to_poincare(boost(d.center, local)));
  }
  return out;
}

// ---------------------------------------------------------------- writer

class Canvas {
 public:
  Canvas(double width, double height, std::function<Vec2(const Vec2&)> map)
      : width_(width), height_(height), map_(std::move(map)) {}

  std::string path(const std::vector<Vec2>& pts) const {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 p = map_(pts[i]);
      d += (i == 0 ? "M " : " L ") + num(p.x) + " " + num(p.y);
    }
    return "    <path d=\"" + d + " Z\"/>\n";
  }
  std::string polyline(const std::vector<Vec2>& pts) const {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 p = map_(pts[i]);
      d += (i == 0 ? "" : " ") + num(p.x) + "," + num(p.y);
    }
    return "    <polyline points=\"" + d + "\"/>\n";
  }
  std::string label(const Vec2& at, const std::string& text) const {
    const Vec2 p = map_(at);
    return "    <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) + "\">" + text + "</text>\n";
  }
  std::string header() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(width_) + "\" height=\"" + num(height_) + "\" viewBox=\"0 0 " + num(width_) +
           " " + num(height_) + "\">\n";
  }

 private:
  double width_, height_;
  std::function<Vec2(const Vec2&)> map_;
};

struct Layers {
  std::string cells, discs, notes;

  std::string finish(const Canvas& canvas) const {
    return canvas.header() +
           "  <g id=\"cells\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\">\n" + cells +
           "  </g>\n"
           "  <g id=\"discs\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\">\n" +
           discs +
           "  </g>\n"
           "  <g id=\"annotations\" fill=\"#b03020\" stroke=\"none\" font-family=\"sans-serif\" "
           "font-size=\"10\">\n" +
           notes + "  </g>\n</svg>\n";
  }
};

std::vector<Vec2> flatten(const std::vector<Vec3>& pts) {
  std::vector<Vec2> out;
  for (const auto& p : pts) out.push_back({p.x, p.y});
  return out;
}

}  // namespace

std::vector<std::vector<Vec3>> cell_outlines(const io::PackingDocument& packing,
                                             const io::TilingDocument& tiling,
                                             const RenderOptions& options) {
  if (packing.geometry != tiling.geometry) {
    throw Error(ErrorKind::kInvalidArgument, "packing and tiling geometries differ");
  }
  std::vector<std::vector<Vec3>> out;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        for (const auto& cell : t.cells) {
          std::vector<Vec3> loop;
          if constexpr (std::is_same_v<T, EuclideanTiling>) {
            for (const auto& v : cell.vertices) loop.push_back({v.x, v.y, 0.0});
            if (cell.empty()) loop.clear();
          } else if constexpr (std::is_same_v<T, SphericalTiling>) {
            const View view(options.view_dir);
            loop = clip_to_view(sphere_boundary(cell, view), cell, view);
          } else {
            for (const auto& k : klein_outline(cell, t.clip_radius)) loop.push_back(hyper::from_klein(k));
          }
          if (loop.size() < 3) loop.clear();
          out.push_back(std::move(loop));
        }
      },
      tiling.tiling);
  return out;
}

std::string render_svg(const io::PackingDocument& packing, const io::TilingDocument* tiling,
                       const RenderOptions& options) {
  if (tiling && tiling->geometry != packing.geometry) {
    throw Error(ErrorKind::kInvalidArgument, "packing and tiling geometries differ");
  }
  const double size = options.size;
  Layers layers;
  switch (packing.geometry) {
    case Geometry::kEuclidean: {
      const euclid::Box box = options.viewport ? *options.viewport : io::effective_bbox(packing);
      const double s = size / box.width();
      const Canvas canvas(size, box.height() * s, [box, s](const Vec2& p) {
        return Vec2{(p.x - box.xmin) * s, (box.ymax - p.y) * s};
      });
      if (tiling) {
        for (const auto& loop : cell_outlines(packing, *tiling, options)) {
          if (loop.empty()) continue;
          layers.cells += canvas.path(flatten(loop));
        }
      }
      const auto discs = io::euclidean_discs(packing);
      for (std::size_t i = 0; i < discs.size(); ++i) {
        std::vector<Vec2> ring;
        const int k = steps_for(kTwoPi);
        for (int j = 0; j <= k; ++j) {
          ring.push_back(discs[i].center + unit_at(kTwoPi * j / k) * discs[i].radius);
        }
        layers.discs += canvas.polyline(ring);
        if (options.labels) layers.notes += canvas.label(discs[i].center, std::to_string(i));
      }
      const auto copies = io::polygon_copies(packing);
      for (std::size_t i = 0; i < copies.size(); ++i) {
        auto closed = copies[i];
        if (!closed.empty()) closed.push_back(closed.front());
        layers.discs += canvas.polyline(closed);
        if (options.labels) {
          Vec2 c;
          for (const auto& p : copies[i]) c = c + p;
          layers.notes += canvas.label(c / static_cast<double>(copies[i].size()), std::to_string(i));
        }
      }
      const auto ring = io::polygon_ring(packing);
      if (ring.size() >= 3) layers.notes += canvas.path(ring);
      return layers.finish(canvas);
    }
    case Geometry::kSphere: {
      const View view(options.view_dir);
      const double half = size / 2.0;
      const Canvas canvas(size, size, [half](const Vec2& p) {
        return Vec2{half + 0.95 * half * p.x, half - 0.95 * half * p.y};
      });
      if (tiling) {
        for (const auto& loop : cell_outlines(packing, *tiling, options)) {
          if (loop.empty()) continue;
          std::vector<Vec2> flat;
          for (const auto& u : loop) flat.push_back(view.project(u));
          layers.cells += canvas.path(flat);
        }
      }
      std::vector<Vec2> outline;
      for (int j = 0, k = steps_for(kTwoPi); j <= k; ++j) outline.push_back(unit_at(kTwoPi * j / k));
      layers.notes += canvas.polyline(outline);
      const auto discs = io::sphere_discs(packing);
      for (std::size_t i = 0; i < discs.size(); ++i) {
        std::vector<Vec2> run;
        for (const auto& u : cap_boundary(discs[i])) {
          if (view.visible(u)) {
            run.push_back(view.project(u));
          } else if (!run.empty()) {
            if (run.size() >= 2) layers.discs += canvas.polyline(run);
            run.clear();
          }
        }
        if (run.size() >= 2) layers.discs += canvas.polyline(run);
        if (options.labels && view.visible(discs[i].center)) {
          layers.notes += canvas.label(view.project(discs[i].center), std::to_string(i));
        }
      }
      return layers.finish(canvas);
    }
    case Geometry::kHyperbolic: {
      const double half = size / 2.0;
      const Canvas canvas(size, size, [half](const Vec2& p) {
        return Vec2{half + 0.95 * half * p.x, half - 0.95 * half * p.y};
      });
      if (tiling) {
        for (const auto& loop : cell_outlines(packing, *tiling, options)) {
          if (loop.empty()) continue;
          std::vector<Vec2> flat;
          for (const auto& x : loop) flat.push_back(hyper::to_poincare(x));
          layers.cells += canvas.path(flat);
        }
      }
      std::vector<Vec2> outline;
      for (int j = 0, k = steps_for(kTwoPi); j <= k; ++j) outline.push_back(unit_at(kTwoPi * j / k));
      layers.notes += canvas.polyline(outline);
      const auto discs = io::hyperbolic_discs(packing);
      for (std::size_t i = 0; i < discs.size(); ++i) {
        layers.discs += canvas.polyline(hyperbolic_circle(discs[i]));
        if (options.labels) {
          layers.notes += canvas.label(hyper::to_poincare(discs[i].center), std::to_string(i));
        }
      }
      return layers.finish(canvas);
    }
  }
  return {};
}

}  // namespace discsep::svg
