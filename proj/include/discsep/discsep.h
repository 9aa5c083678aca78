/* Copyright 2026 The discsep Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS-IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libdiscsep.
 *
 * Every function returns a ds_status. On failure the message of the last
 * error on the calling thread is available from ds_last_error(). Strings
 * returned through `char**` out-parameters are owned by the caller and must
 * be released with ds_free_string(). Handles are released with their
 * matching *_free function; passing NULL to a free function is a no-op.
 */

#ifndef DISCSEP_DISCSEP_H_
#define DISCSEP_DISCSEP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DISCSEP_BUILDING_LIBRARY)
#define DS_API __declspec(dllexport)
#else
#define DS_API __declspec(dllimport)
#endif
#else
#define DS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ds_status {
  DS_OK = 0,
  DS_ERR_INVALID_ARGUMENT = 1,
  DS_ERR_PARSE = 2,
  DS_ERR_NOT_A_PACKING = 3,
  DS_ERR_GEOMETRY = 4,
  DS_ERR_SEARCH_FAILED = 5,
  DS_ERR_IO = 6,
  DS_ERR_VERIFICATION_FAILED = 7,
  DS_ERR_INTERNAL = 8
} ds_status;

typedef enum ds_geometry {
  DS_EUCLIDEAN = 0,
  DS_SPHERE = 1,
  DS_HYPERBOLIC = 2
} ds_geometry;

typedef struct ds_packing ds_packing;
typedef struct ds_tiling ds_tiling;

typedef struct ds_render_options {
  double size;         /* picture width in px; <= 0 selects 800 */
  double view_dir[3];  /* sphere view direction; all zero selects +z */
  int labels;          /* nonzero draws disc indices */
} ds_render_options;

typedef struct ds_cap {
  double apex[2];
  double contact1[2];
  double contact2[2];
  double side1;
  double side2;
  double angle;
} ds_cap;

DS_API const char* ds_version(void);
DS_API const char* ds_last_error(void);
DS_API const char* ds_status_name(ds_status status);
DS_API void ds_free_string(char* s);

/* Packings. */
DS_API ds_status ds_packing_parse(const char* json, ds_packing** out);
DS_API ds_status ds_packing_generate(ds_geometry geometry, int n, double rmin, double rmax,
                                     uint64_t seed, ds_packing** out);
DS_API ds_status ds_packing_to_json(const ds_packing* packing, char** out);
DS_API ds_status ds_packing_geometry(const ds_packing* packing, ds_geometry* out);
DS_API ds_status ds_packing_size(const ds_packing* packing, size_t* out);
DS_API void ds_packing_free(ds_packing* packing);

/* Tilings. clip_radius <= 0 selects the default for hyperbolic packings and
 * is ignored otherwise. */
DS_API ds_status ds_tiling_build(const ds_packing* packing, double clip_radius,
                                 ds_tiling** out);
DS_API ds_status ds_tiling_parse(const char* json, ds_tiling** out);
DS_API ds_status ds_tiling_to_json(const ds_tiling* tiling, char** out);
DS_API void ds_tiling_free(ds_tiling* tiling);

/* Returns DS_OK when the tiling separates the packing and
 * DS_ERR_VERIFICATION_FAILED (message in ds_last_error) when it does not. */
DS_API ds_status ds_verify(const ds_packing* packing, const ds_tiling* tiling, double tol);

/* tiling may be NULL; options may be NULL for defaults. */
DS_API ds_status ds_render_svg(const ds_packing* packing, const ds_tiling* tiling,
                               const ds_render_options* options, char** out);

/* Caps of a convex polygon given as interleaved x, y coordinates. */
DS_API ds_status ds_caps_isosceles(const double* xy, size_t count, double angle,
                                   ds_cap* out);
/* Sets *found to 0 when the sampled caps are all isosceles within margin. */
DS_API ds_status ds_caps_non_isosceles(const double* xy, size_t count, double margin,
                                       ds_cap* out, int* found);

/* Builds and certifies the non-separable packing for a polygon document
 * ({"vertices": [[x, y], ...]}). *certified is 1 when every consecutive pair
 * is LP-infeasible. The packing JSON includes the certificate block. */
DS_API ds_status ds_counterexample(const char* polygon_json, ds_packing** out,
                                   int* certified);

#ifdef __cplusplus
}
#endif

#endif /* DISCSEP_DISCSEP_H_ */
