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

#include "discsep/discsep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "discsep/error.hpp"
#include "discsep/nonseparable.hpp"
#include "discsep/pack_io.hpp"
#include "discsep/svg.hpp"

struct ds_packing {
  discsep::io::PackingDocument doc;
};

struct ds_tiling {
  discsep::io::TilingDocument doc;
};

namespace {

thread_local std::string last_error;

ds_status status_of(discsep::ErrorKind kind) {
  using discsep::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument: return DS_ERR_INVALID_ARGUMENT;
    case ErrorKind::kNotAPacking: return DS_ERR_NOT_A_PACKING;
    case ErrorKind::kDegenerate: return DS_ERR_GEOMETRY;
    case ErrorKind::kSearchFailed: return DS_ERR_SEARCH_FAILED;
    case ErrorKind::kParse: return DS_ERR_PARSE;
    case ErrorKind::kIo: return DS_ERR_IO;
  }
  return DS_ERR_INTERNAL;
}

template <typename F>
ds_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const discsep::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DS_ERR_INTERNAL;
  }
}

ds_status invalid(const char* what) {
  last_error = what;
  return DS_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

discsep::Geometry to_geometry(ds_geometry g) {
  switch (g) {
    case DS_EUCLIDEAN: return discsep::Geometry::kEuclidean;
    case DS_SPHERE: return discsep::Geometry::kSphere;
    case DS_HYPERBOLIC: return discsep::Geometry::kHyperbolic;
  }
  throw discsep::Error(discsep::ErrorKind::kInvalidArgument, "unknown geometry");
}

discsep::caps::ConvexDisc polygon_from(const double* xy, size_t count) {
  std::vector<discsep::Vec2> pts;
  for (size_t i = 0; i < count; ++i) pts.push_back({xy[2 * i], xy[2 * i + 1]});
  return discsep::caps::ConvexDisc(std::move(pts));
}

void fill_cap(const discsep::caps::Cap& c, ds_cap* out) {
  out->apex[0] = c.apex.x;
  out->apex[1] = c.apex.y;
  out->contact1[0] = c.contact1.x;
  out->contact1[1] = c.contact1.y;
  out->contact2[0] = c.contact2.x;
  out->contact2[1] = c.contact2.y;
  out->side1 = c.side1;
  out->side2 = c.side2;
  out->angle = c.angle;
}

}  // namespace

extern "C" {

const char* ds_version(void) { return discsep::io::kToolVersion; }

const char* ds_last_error(void) { return last_error.c_str(); }

const char* ds_status_name(ds_status status) {
  switch (status) {
    case DS_OK: return "ok";
    case DS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DS_ERR_PARSE: return "parse error";
    case DS_ERR_NOT_A_PACKING: return "not a packing";
    case DS_ERR_GEOMETRY: return "degenerate geometry";
    case DS_ERR_SEARCH_FAILED: return "search failed";
    case DS_ERR_IO: return "i/o error";
    case DS_ERR_VERIFICATION_FAILED: return "verification failed";
    case DS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ds_free_string(char* s) { std::free(s); }

ds_status ds_packing_parse(const char* json, ds_packing** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ds_packing{discsep::io::parse_packing(json)};
    return DS_OK;
  });
}

ds_status ds_packing_generate(ds_geometry geometry, int n, double rmin, double rmax,
                              uint64_t seed, ds_packing** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = new ds_packing{
        discsep::io::gen_random_packing(to_geometry(geometry), n, rmin, rmax, seed)};
    return DS_OK;
  });
}

ds_status ds_packing_to_json(const ds_packing* packing, char** out) {
  if (!packing || !out) return invalid("null argument");
  return guarded([&] {
    *out = copy_string(discsep::io::emit_packing(packing->doc));
    return DS_OK;
  });
}

ds_status ds_packing_geometry(const ds_packing* packing, ds_geometry* out) {
  if (!packing || !out) return invalid("null argument");
  *out = static_cast<ds_geometry>(static_cast<int>(packing->doc.geometry));
  return DS_OK;
}

ds_status ds_packing_size(const ds_packing* packing, size_t* out) {
  if (!packing || !out) return invalid("null argument");
  *out = packing->doc.discs.size();
  return DS_OK;
}

void ds_packing_free(ds_packing* packing) { delete packing; }

ds_status ds_tiling_build(const ds_packing* packing, double clip_radius, ds_tiling** out) {
  if (!packing || !out) return invalid("null argument");
  return guarded([&] {
    if (packing->doc.discs.empty()) {
      throw discsep::Error(discsep::ErrorKind::kInvalidArgument, "packing has no discs");
    }
    *out = new ds_tiling{discsep::io::build_tiling(packing->doc, clip_radius)};
    return DS_OK;
  });
}

ds_status ds_tiling_parse(const char* json, ds_tiling** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ds_tiling{discsep::io::parse_tiling(json)};
    return DS_OK;
  });
}

ds_status ds_tiling_to_json(const ds_tiling* tiling, char** out) {
  if (!tiling || !out) return invalid("null argument");
  return guarded([&] {
    *out = copy_string(discsep::io::emit_tiling(tiling->doc));
    return DS_OK;
  });
}

void ds_tiling_free(ds_tiling* tiling) { delete tiling; }

ds_status ds_verify(const ds_packing* packing, const ds_tiling* tiling, double tol) {
  if (!packing || !tiling) return invalid("null argument");
  return guarded([&] {
    const auto r = discsep::io::verify(packing->doc, tiling->doc, tol);
    if (r.passed) return DS_OK;
    last_error = r.message;
    return DS_ERR_VERIFICATION_FAILED;
  });
}

ds_status ds_render_svg(const ds_packing* packing, const ds_tiling* tiling,
                        const ds_render_options* options, char** out) {
  if (!packing || !out) return invalid("null argument");
  return guarded([&] {
    discsep::svg::RenderOptions opt;
    if (options) {
      if (options->size > 0.0) opt.size = options->size;
      const discsep::Vec3 v{options->view_dir[0], options->view_dir[1], options->view_dir[2]};
      if (discsep::norm(v) > 0.0) opt.view_dir = v;
      opt.labels = options->labels != 0;
    }
    *out = copy_string(discsep::svg::render_svg(packing->doc, tiling ? &tiling->doc : nullptr, opt));
    return DS_OK;
  });
}

ds_status ds_caps_isosceles(const double* xy, size_t count, double angle, ds_cap* out) {
  if (!xy || !out) return invalid("null argument");
  return guarded([&] {
    fill_cap(discsep::caps::find_isosceles_cap(polygon_from(xy, count), angle), out);
    return DS_OK;
  });
}

ds_status ds_caps_non_isosceles(const double* xy, size_t count, double margin, ds_cap* out,
                                int* found) {
  if (!xy || !out || !found) return invalid("null argument");
  return guarded([&] {
    const auto cap = discsep::caps::find_non_isosceles_cap(polygon_from(xy, count), margin);
    *found = cap ? 1 : 0;
    if (cap) fill_cap(*cap, out);
    return DS_OK;
  });
}

ds_status ds_counterexample(const char* polygon_json, ds_packing** out, int* certified) {
  if (!polygon_json || !out || !certified) return invalid("null argument");
  return guarded([&] {
    const auto disc = discsep::io::parse_polygon_disc(polygon_json);
    const auto c = discsep::nonsep::build_counterexample(disc);
    *out = new ds_packing{discsep::io::counterexample_document(disc, c)};
    *certified = c.certificate.passed ? 1 : 0;
    return DS_OK;
  });
}

}  // extern "C"
