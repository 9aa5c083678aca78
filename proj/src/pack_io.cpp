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

#include "discsep/pack_io.hpp"

#include <algorithm>
#include <random>

#include "discsep/error.hpp"

namespace discsep::io {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorKind::kParse, (ptr.empty() ? "/" : ptr) + ": " + msg);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(ptr, std::string("missing \"") + key + "\"");
  return *it;
}

void expect_object(const Json& j, const std::string& ptr) {
  if (!j.is_object()) schema(ptr, "expected an object");
}

void expect_array(const Json& j, const std::string& ptr) {
  if (!j.is_array()) schema(ptr, "expected an array");
}

double number(const Json& j, const std::string& ptr) {
  if (!j.is_number()) schema(ptr, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema(ptr, "expected a finite number");
  return v;
}

int integer(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer()) schema(ptr, "expected an integer");
  return j.get<int>();
}

bool boolean(const Json& j, const std::string& ptr) {
  if (!j.is_boolean()) schema(ptr, "expected a boolean");
  return j.get<bool>();
}

std::vector<double> numbers(const Json& j, std::size_t count, const std::string& ptr) {
  expect_array(j, ptr);
  if (j.size() != count) schema(ptr, "expected " + std::to_string(count) + " numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(number(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

Vec2 vec2(const Json& j, const std::string& ptr) {
  const auto v = numbers(j, 2, ptr);
  return {v[0], v[1]};
}

Vec3 vec3(const Json& j, const std::string& ptr) {
  const auto v = numbers(j, 3, ptr);
  return {v[0], v[1], v[2]};
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& ptr) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; })) {
      schema(ptr + "/" + it.key(), "unknown key");
    }
  }
}

Json to_json(const Vec2& v) { return Json::array({v.x, v.y}); }
Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

const char* kind_name(SCellKind k) {
  switch (k) {
    case SCellKind::kFull: return "full";
    case SCellKind::kHemisphere: return "hemisphere";
    case SCellKind::kLune: return "lune";
    case SCellKind::kPolygon: return "polygon";
    case SCellKind::kEmpty: return "empty";
  }
  return "empty";
}

SCellKind parse_kind(const Json& j, const std::string& ptr) {
  if (!j.is_string()) schema(ptr, "expected a string");
  const auto s = j.get<std::string>();
  for (auto k : {SCellKind::kFull, SCellKind::kHemisphere, SCellKind::kLune,
                 SCellKind::kPolygon, SCellKind::kEmpty}) {
    if (s == kind_name(k)) return k;
  }
  schema(ptr, "unknown cell kind \"" + s + "\"");
}

std::vector<int> int_list(const Json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

}  // namespace

const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::kEuclidean: return "euclidean";
    case Geometry::kSphere: return "sphere";
    case Geometry::kHyperbolic: return "hyperbolic-poincare";
  }
  return "euclidean";
}

Geometry parse_geometry(std::string_view name) {
  if (name == "euclidean") return Geometry::kEuclidean;
  if (name == "sphere") return Geometry::kSphere;
  if (name == "hyperbolic-poincare" || name == "hyperbolic") return Geometry::kHyperbolic;
  throw Error(ErrorKind::kInvalidArgument, "unknown geometry \"" + std::string(name) + "\"");
}

std::vector<euclid::Disc> euclidean_discs(const PackingDocument& doc) {
  std::vector<euclid::Disc> out;
  for (const auto& d : doc.discs) out.push_back({{d.center[0], d.center[1]}, d.r});
  return out;
}

std::vector<sphere::Disc> sphere_discs(const PackingDocument& doc) {
  std::vector<sphere::Disc> out;
  for (const auto& d : doc.discs) {
    out.push_back({normalized(Vec3{d.center[0], d.center[1], d.center[2]}), d.r});
  }
  return out;
}

std::vector<hyper::Disc> hyperbolic_discs(const PackingDocument& doc) {
  std::vector<hyper::Disc> out;
  for (const auto& d : doc.discs) {
    out.push_back({hyper::from_poincare({d.center[0], d.center[1]}), d.r});
  }
  return out;
}

euclid::Box effective_bbox(const PackingDocument& doc) {
  if (doc.bbox) return *doc.bbox;
  if (doc.discs.empty()) return euclid::Box{};
  euclid::Box b{1e300, 1e300, -1e300, -1e300};
  for (const auto& d : doc.discs) {
    b.xmin = std::min(b.xmin, d.center[0] - d.r);
    b.ymin = std::min(b.ymin, d.center[1] - d.r);
    b.xmax = std::max(b.xmax, d.center[0] + d.r);
    b.ymax = std::max(b.ymax, d.center[1] + d.r);
  }
  const double pad = 0.1 * std::max(b.width(), b.height());
  return {b.xmin - pad, b.ymin - pad, b.xmax + pad, b.ymax + pad};
}

PackingDocument parse_packing(std::string_view text) {
  const Json j = parse_json(text);
  expect_object(j, "");
  only_keys(j, {"geometry", "bbox", "discs", "polygon_disc", "certificate", "meta"}, "");
  PackingDocument doc;
  const Json& g = member(j, "geometry", "");
  if (!g.is_string()) schema("/geometry", "expected a string");
  const auto gname = g.get<std::string>();
  if (gname != "euclidean" && gname != "sphere" && gname != "hyperbolic-poincare") {
    schema("/geometry", "unknown geometry \"" + gname + "\"");
  }
  doc.geometry = parse_geometry(gname);

  if (auto it = j.find("bbox"); it != j.end()) {
    if (doc.geometry != Geometry::kEuclidean) schema("/bbox", "only allowed for euclidean");
    const auto b = numbers(*it, 4, "/bbox");
    doc.bbox = euclid::Box{b[0], b[1], b[2], b[3]};
    if (!(b[2] > b[0]) || !(b[3] > b[1])) schema("/bbox", "bounding box has no interior");
  }
  if (auto it = j.find("polygon_disc"); it != j.end()) {
    expect_object(*it, "/polygon_disc");
    doc.polygon_disc = *it;
  }
  if (auto it = j.find("certificate"); it != j.end()) {
    expect_object(*it, "/certificate");
    doc.certificate = *it;
  }
  if (auto it = j.find("meta"); it != j.end()) {
    expect_object(*it, "/meta");
    doc.meta = *it;
  }

  const Json& discs = member(j, "discs", "");
  expect_array(discs, "/discs");
  const std::size_t dim = doc.geometry == Geometry::kSphere ? 3 : 2;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const std::string ptr = "/discs/" + std::to_string(i);
    expect_object(discs[i], ptr);
    only_keys(discs[i], {"center", "r"}, ptr);
    DiscRecord rec;
    rec.center = numbers(member(discs[i], "center", ptr), dim, ptr + "/center");
    rec.r = number(member(discs[i], "r", ptr), ptr + "/r");
    if (!(rec.r > 0.0)) schema(ptr + "/r", "radius must be positive");
    if (doc.geometry == Geometry::kSphere) {
      const double len = norm(Vec3{rec.center[0], rec.center[1], rec.center[2]});
      if (std::abs(len - 1.0) > 1e-9) schema(ptr + "/center", "center not unit");
      if (!(rec.r < sphere::kMaxRadius)) schema(ptr + "/r", "radius must be below pi/2");
    } else if (doc.geometry == Geometry::kHyperbolic) {
      if (std::hypot(rec.center[0], rec.center[1]) >= 1.0 - 1e-12) {
        schema(ptr + "/center", "outside Poincaré disc");
      }
    }
    doc.discs.push_back(std::move(rec));
  }
  if (doc.discs.empty() && !doc.polygon_disc) schema("/discs", "no discs");

  switch (doc.geometry) {
    case Geometry::kEuclidean:
      validate_packing(euclidean_discs(doc), effective_bbox(doc));
      break;
    case Geometry::kSphere:
      validate_packing(sphere_discs(doc));
      break;
    case Geometry::kHyperbolic:
      validate_packing(hyperbolic_discs(doc));
      break;
  }
  return doc;
}

std::string emit_packing(const PackingDocument& doc) {
  Json j;
  j["geometry"] = geometry_name(doc.geometry);
  if (doc.bbox) j["bbox"] = Json::array({doc.bbox->xmin, doc.bbox->ymin, doc.bbox->xmax, doc.bbox->ymax});
  Json discs = Json::array();
  for (const auto& d : doc.discs) {
    Json c = Json::array();
    for (double v : d.center) c.push_back(v);
    discs.push_back(Json{{"center", c}, {"r", d.r}});
  }
  j["discs"] = discs;
  if (doc.polygon_disc) j["polygon_disc"] = *doc.polygon_disc;
  if (doc.certificate) j["certificate"] = *doc.certificate;
  j["meta"] = doc.meta;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- tilings

namespace {

Json emit_cell(const ConvexCellE& c) {
  Json cons = Json::array();
  for (const auto& k : c.constraints) {
    cons.push_back(Json{{"normal", to_json(k.line.normal)}, {"offset", k.line.offset}, {"other", k.other}});
  }
  Json verts = Json::array();
  for (const auto& v : c.vertices) verts.push_back(to_json(v));
  return Json{{"owner", c.owner}, {"constraints", cons}, {"vertices", verts}, {"edges", c.edges}};
}

Json emit_cell(const ConvexCellS& c) {
  Json cons = Json::array();
  for (const auto& k : c.constraints) {
    cons.push_back(Json{{"normal", to_json(k.circle.normal)}, {"other", k.other}});
  }
  Json verts = Json::array();
  for (const auto& v : c.vertices) verts.push_back(to_json(v));
  return Json{{"owner", c.owner}, {"kind", kind_name(c.kind)}, {"constraints", cons},
              {"vertices", verts}, {"edges", c.edges}};
}

Json emit_cell(const ConvexCellH& c) {
  Json cons = Json::array();
  for (const auto& k : c.constraints) {
    cons.push_back(Json{{"normal", to_json(k.geodesic.normal)}, {"other", k.other}});
  }
  Json verts = Json::array();
  for (const auto& v : c.vertices) {
    Json o;
    o["ideal"] = v.ideal;
    o["klein"] = to_json(v.klein);
    o["poincare"] = to_json(v.ideal ? v.klein : hyper::to_poincare(v.point));
    if (!v.ideal) o["point"] = to_json(v.point);
    verts.push_back(o);
  }
  return Json{{"owner", c.owner}, {"unbounded", c.unbounded}, {"empty", c.empty},
              {"constraints", cons}, {"vertices", verts}, {"edges", c.edges}};
}

ConvexCellE parse_cell_e(const Json& j, const std::string& ptr) {
  expect_object(j, ptr);
  ConvexCellE c;
  c.owner = integer(member(j, "owner", ptr), ptr + "/owner");
  const Json& cons = member(j, "constraints", ptr);
  expect_array(cons, ptr + "/constraints");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string p = ptr + "/constraints/" + std::to_string(i);
    expect_object(cons[i], p);
    EConstraint k;
    k.line.normal = vec2(member(cons[i], "normal", p), p + "/normal");
    k.line.offset = number(member(cons[i], "offset", p), p + "/offset");
    k.other = integer(member(cons[i], "other", p), p + "/other");
    c.constraints.push_back(k);
  }
  const Json& verts = member(j, "vertices", ptr);
  expect_array(verts, ptr + "/vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    c.vertices.push_back(vec2(verts[i], ptr + "/vertices/" + std::to_string(i)));
  }
  c.edges = int_list(member(j, "edges", ptr), ptr + "/edges");
  return c;
}

ConvexCellS parse_cell_s(const Json& j, const std::string& ptr) {
  expect_object(j, ptr);
  ConvexCellS c;
  c.owner = integer(member(j, "owner", ptr), ptr + "/owner");
  c.kind = parse_kind(member(j, "kind", ptr), ptr + "/kind");
  const Json& cons = member(j, "constraints", ptr);
  expect_array(cons, ptr + "/constraints");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string p = ptr + "/constraints/" + std::to_string(i);
    expect_object(cons[i], p);
    SConstraint k;
    k.circle.normal = vec3(member(cons[i], "normal", p), p + "/normal");
    k.other = integer(member(cons[i], "other", p), p + "/other");
    c.constraints.push_back(k);
  }
  const Json& verts = member(j, "vertices", ptr);
  expect_array(verts, ptr + "/vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    c.vertices.push_back(vec3(verts[i], ptr + "/vertices/" + std::to_string(i)));
  }
  c.edges = int_list(member(j, "edges", ptr), ptr + "/edges");
  return c;
}

ConvexCellH parse_cell_h(const Json& j, const std::string& ptr) {
  expect_object(j, ptr);
  ConvexCellH c;
  c.owner = integer(member(j, "owner", ptr), ptr + "/owner");
  c.unbounded = boolean(member(j, "unbounded", ptr), ptr + "/unbounded");
  c.empty = boolean(member(j, "empty", ptr), ptr + "/empty");
  const Json& cons = member(j, "constraints", ptr);
  expect_array(cons, ptr + "/constraints");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string p = ptr + "/constraints/" + std::to_string(i);
    expect_object(cons[i], p);
    HConstraint k;
    k.geodesic.normal = vec3(member(cons[i], "normal", p), p + "/normal");
    k.other = integer(member(cons[i], "other", p), p + "/other");
    c.constraints.push_back(k);
  }
  const Json& verts = member(j, "vertices", ptr);
  expect_array(verts, ptr + "/vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string p = ptr + "/vertices/" + std::to_string(i);
    expect_object(verts[i], p);
    HVertex v;
    v.ideal = boolean(member(verts[i], "ideal", p), p + "/ideal");
    v.klein = vec2(member(verts[i], "klein", p), p + "/klein");
    if (!v.ideal) v.point = vec3(member(verts[i], "point", p), p + "/point");
    c.vertices.push_back(v);
  }
  c.edges = int_list(member(j, "edges", ptr), ptr + "/edges");
  return c;
}

}  // namespace

TilingDocument parse_tiling(std::string_view text) {
  const Json j = parse_json(text);
  expect_object(j, "");
  only_keys(j, {"geometry", "cells", "domain", "meta"}, "");
  TilingDocument doc;
  const Json& g = member(j, "geometry", "");
  if (!g.is_string()) schema("/geometry", "expected a string");
  const auto gname = g.get<std::string>();
  if (gname != "euclidean" && gname != "sphere" && gname != "hyperbolic-poincare") {
    schema("/geometry", "unknown geometry \"" + gname + "\"");
  }
  doc.geometry = parse_geometry(gname);
  const Json& domain = member(j, "domain", "");
  expect_object(domain, "/domain");
  const Json& cells = member(j, "cells", "");
  expect_array(cells, "/cells");
  const auto cell_ptr = [](std::size_t i) { return "/cells/" + std::to_string(i); };
  switch (doc.geometry) {
    case Geometry::kEuclidean: {
      EuclideanTiling t;
      const auto b = numbers(member(domain, "bbox", "/domain"), 4, "/domain/bbox");
      t.bbox = {b[0], b[1], b[2], b[3]};
      for (std::size_t i = 0; i < cells.size(); ++i) t.cells.push_back(parse_cell_e(cells[i], cell_ptr(i)));
      doc.tiling = std::move(t);
      break;
    }
    case Geometry::kSphere: {
      SphericalTiling t;
      for (std::size_t i = 0; i < cells.size(); ++i) t.cells.push_back(parse_cell_s(cells[i], cell_ptr(i)));
      doc.tiling = std::move(t);
      break;
    }
    case Geometry::kHyperbolic: {
      HyperbolicTiling t;
      t.clip_radius = number(member(domain, "clip_radius", "/domain"), "/domain/clip_radius");
      if (!(t.clip_radius > 0.0)) schema("/domain/clip_radius", "must be positive");
      for (std::size_t i = 0; i < cells.size(); ++i) t.cells.push_back(parse_cell_h(cells[i], cell_ptr(i)));
      doc.tiling = std::move(t);
      break;
    }
  }
  return doc;
}

std::string emit_tiling(const TilingDocument& doc) {
  Json j;
  j["geometry"] = geometry_name(doc.geometry);
  Json cells = Json::array();
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, EuclideanTiling>) {
          j["domain"] = Json{{"bbox", Json::array({t.bbox.xmin, t.bbox.ymin, t.bbox.xmax, t.bbox.ymax})}};
        } else if constexpr (std::is_same_v<T, SphericalTiling>) {
          j["domain"] = Json{{"sphere", "unit"}};
        } else {
          j["domain"] = Json{{"clip_radius", t.clip_radius}};
        }
        for (const auto& c : t.cells) cells.push_back(emit_cell(c));
      },
      doc.tiling);
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

TilingDocument build_tiling(const PackingDocument& packing, double clip_radius) {
  TilingDocument doc;
  doc.geometry = packing.geometry;
  switch (packing.geometry) {
    case Geometry::kEuclidean:
      doc.tiling = build_power_diagram(euclidean_discs(packing), effective_bbox(packing));
      break;
    case Geometry::kSphere:
      doc.tiling = build_spherical_diagram(sphere_discs(packing));
      break;
    case Geometry::kHyperbolic:
      doc.tiling = build_hyperbolic_diagram(hyperbolic_discs(packing), clip_radius);
      break;
  }
  return doc;
}

VerifyResult verify(const PackingDocument& packing, const TilingDocument& tiling, double tol) {
  if (packing.geometry != tiling.geometry) {
    throw Error(ErrorKind::kInvalidArgument, "packing and tiling geometries differ");
  }
  VerifyReport r;
  switch (packing.geometry) {
    case Geometry::kEuclidean:
      r = verify_separating_tiling(euclidean_discs(packing), std::get<EuclideanTiling>(tiling.tiling), tol);
      break;
    case Geometry::kSphere:
      r = verify_separating_tiling(sphere_discs(packing), std::get<SphericalTiling>(tiling.tiling), tol);
      break;
    case Geometry::kHyperbolic:
      r = verify_separating_tiling(hyperbolic_discs(packing), std::get<HyperbolicTiling>(tiling.tiling), tol);
      break;
  }
  return {r.passed, r.message};
}

// ---------------------------------------------------------------- generator

namespace {

constexpr double kGenClearance = 1e-3;
constexpr long kMaxRejections = 1000000;
constexpr double kHyperbolicSpread = 5.0;

double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PackingDocument gen_random_packing(Geometry geometry, int n, double rmin, double rmax,
                                   std::uint64_t seed, const euclid::Box& box) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be at least 1");
  if (geometry == Geometry::kSphere && n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "sphere packings need n >= 2");
  }
  if (!(rmin > 0.0) || !(rmax >= rmin)) {
    throw Error(ErrorKind::kInvalidArgument, "radius range must satisfy 0 < rmin <= rmax");
  }
  if (geometry == Geometry::kSphere && !(rmax < sphere::kMaxRadius)) {
    throw Error(ErrorKind::kInvalidArgument, "sphere radii must be below pi/2");
  }

  std::mt19937_64 rng(seed);
  PackingDocument doc;
  doc.geometry = geometry;
  if (geometry == Geometry::kEuclidean) doc.bbox = box;
  std::vector<euclid::Disc> ed;
  std::vector<sphere::Disc> sd;
  std::vector<hyper::Disc> hd;
  long rejections = 0;
  while (static_cast<int>(doc.discs.size()) < n) {
    const double r = rmin + (rmax - rmin) * uniform(rng);
    bool ok = true;
    DiscRecord rec;
    rec.r = r;
    switch (geometry) {
      case Geometry::kEuclidean: {
        const Vec2 c{box.xmin + box.width() * uniform(rng), box.ymin + box.height() * uniform(rng)};
        ok = c.x - r - box.xmin > kGenClearance && box.xmax - c.x - r > kGenClearance &&
             c.y - r - box.ymin > kGenClearance && box.ymax - c.y - r > kGenClearance;
        for (std::size_t i = 0; ok && i < ed.size(); ++i) {
          ok = distance(c, ed[i].center) - r - ed[i].radius > kGenClearance;
        }
        if (ok) {
          ed.push_back({c, r});
          rec.center = {c.x, c.y};
        }
        break;
      }
      case Geometry::kSphere: {
        const double z = 2.0 * uniform(rng) - 1.0;
        const double phi = kTwoPi * uniform(rng);
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        const Vec3 c = normalized(Vec3{s * std::cos(phi), s * std::sin(phi), z});
        for (std::size_t i = 0; ok && i < sd.size(); ++i) {
          ok = angle_between(c, sd[i].center) - r - sd[i].radius > kGenClearance;
        }
        if (ok) {
          sd.push_back({c, r});
          rec.center = {c.x, c.y, c.z};
        }
        break;
      }
      case Geometry::kHyperbolic: {
        const double rho =
            std::acosh(1.0 + uniform(rng) * (std::cosh(kHyperbolicSpread) - 1.0));
        const double phi = kTwoPi * uniform(rng);
        const Vec2 p = unit_at(phi) * std::tanh(rho / 2.0);
        const hyper::Point c = hyper::from_poincare(p);
        for (std::size_t i = 0; ok && i < hd.size(); ++i) {
          ok = hyper::distance(c, hd[i].center) - r - hd[i].radius > kGenClearance;
        }
        if (ok) {
          hd.push_back({c, r});
          rec.center = {p.x, p.y};
        }
        break;
      }
    }
    if (ok) {
      doc.discs.push_back(std::move(rec));
    } else if (++rejections > kMaxRejections) {
      throw Error(ErrorKind::kSearchFailed, "packing generation failed");
    }
  }
  doc.meta = Json{{"tool", "discsep"}, {"version", kToolVersion}, {"generator", "rejection"},
                  {"seed", seed}, {"rmin", rmin}, {"rmax", rmax}};
  return doc;
}

// ---------------------------------------------------------------- polygons

caps::ConvexDisc parse_polygon_disc(std::string_view text) {
  const Json j = parse_json(text);
  expect_object(j, "");
  const Json& verts = member(j, "vertices", "");
  expect_array(verts, "/vertices");
  if (verts.size() < 3) schema("/vertices", "need at least three vertices");
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    pts.push_back(vec2(verts[i], "/vertices/" + std::to_string(i)));
  }
  try {
    return caps::ConvexDisc(std::move(pts));
  } catch (const Error& e) {
    schema("/vertices", e.what());
  }
}

namespace {

Json cap_json(const caps::Cap& c) {
  return Json{{"apex", to_json(c.apex)},      {"contact1", to_json(c.contact1)},
              {"contact2", to_json(c.contact2)}, {"side1", c.side1},
              {"side2", c.side2},             {"angle", c.angle}};
}

}  // namespace

PackingDocument counterexample_document(const caps::ConvexDisc& disc,
                                        const nonsep::Construction& c) {
  PackingDocument doc;
  doc.geometry = Geometry::kEuclidean;
  Json base = Json::array();
  for (const auto& v : disc.vertices()) base.push_back(to_json(v));
  Json copies = Json::array();
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  for (const auto& d : c.discs) {
    Json verts = Json::array();
    for (const auto& v : d.vertices()) {
      verts.push_back(to_json(v));
      xmin = std::min(xmin, v.x);
      ymin = std::min(ymin, v.y);
      xmax = std::max(xmax, v.x);
      ymax = std::max(ymax, v.y);
    }
    copies.push_back(Json{{"rotation", d.rotation}, {"translation", to_json(d.translation)},
                          {"scale", d.scale}, {"vertices", verts}});
  }
  Json ring = Json::array();
  for (const auto& v : c.ring.vertices) ring.push_back(to_json(v));
  const auto& p = c.params;
  Json params{{"alpha", p.alpha},     {"beta", p.beta},         {"n", p.n},
              {"epsilon", p.epsilon}, {"scale", p.scale},       {"beta_side", p.beta_side},
              {"cap", cap_json(p.cap)}, {"beta_cap", cap_json(p.beta_cap)}};
  doc.polygon_disc = Json{{"vertices", base}, {"params", params}, {"ring", ring},
                          {"ring_sides", c.ring.side_lengths}, {"copies", copies}};
  Json pairs = Json::array();
  for (const auto& s : c.certificate.pairs) {
    pairs.push_back(Json{{"first", s.first}, {"second", s.second},
                         {"status", s.separable ? "feasible" : "infeasible"}});
  }
  doc.certificate = Json{{"passed", c.certificate.passed}, {"pairs", pairs}, {"note", c.certificate.note}};
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
  doc.bbox = euclid::Box{xmin - pad, ymin - pad, xmax + pad, ymax + pad};
  doc.meta = Json{{"tool", "discsep"}, {"version", kToolVersion}, {"generator", "counterexample"}};
  return doc;
}

std::vector<std::vector<Vec2>> polygon_copies(const PackingDocument& doc) {
  std::vector<std::vector<Vec2>> out;
  if (!doc.polygon_disc) return out;
  const auto it = doc.polygon_disc->find("copies");
  if (it == doc.polygon_disc->end()) return out;
  expect_array(*it, "/polygon_disc/copies");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string ptr = "/polygon_disc/copies/" + std::to_string(i);
    const Json& verts = member((*it)[i], "vertices", ptr);
    expect_array(verts, ptr + "/vertices");
    std::vector<Vec2> pts;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      pts.push_back(vec2(verts[k], ptr + "/vertices/" + std::to_string(k)));
    }
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<Vec2> polygon_ring(const PackingDocument& doc) {
  std::vector<Vec2> out;
  if (!doc.polygon_disc) return out;
  const auto it = doc.polygon_disc->find("ring");
  if (it == doc.polygon_disc->end()) return out;
  expect_array(*it, "/polygon_disc/ring");
  for (std::size_t k = 0; k < it->size(); ++k) {
    out.push_back(vec2((*it)[k], "/polygon_disc/ring/" + std::to_string(k)));
  }
  return out;
}

}  // namespace discsep::io
