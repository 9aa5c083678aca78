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

// discsep command line.
//
//   discsep tile --input p.json [--geometry g] [--out t.json] [--svg t.svg]
//   discsep verify --packing p.json --tiling t.json
//   discsep caps --disc poly.json [--alpha a] [--out cap.json]
//   discsep counterexample --disc poly.json [--out cx.json] [--svg cx.svg]
//   discsep gen --geometry g --n N --rmin a --rmax b [--seed s] --out p.json
//
// Exit codes: 0 success, 1 verification failed, 2 bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "discsep/discsep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string geometry;
  std::string input, packing, tiling, disc, out, svg;
  std::uint64_t seed = 42;
  int n = 0;
  double rmin = 0.0, rmax = 0.0;
  double tol = 1e-9;
  std::vector<double> view_dir;
  double clip_radius = 0.0;
  double alpha = 0.0;
  double margin = 1e-3;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& data) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out << data;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw InputError("cannot write " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw InputError("cannot write " + path + ": " + ec.message());
  }
}

// Throws InputError unless st is DS_OK.
void check(ds_status st) {
  if (st == DS_OK) return;
  const std::string msg = ds_last_error();
  throw InputError(msg.empty() ? ds_status_name(st) : msg);
}

std::string take(char* s) {
  std::string out(s);
  ds_free_string(s);
  return out;
}

struct Packing {
  ds_packing* p = nullptr;
  ~Packing() { ds_packing_free(p); }
};

struct Tiling {
  ds_tiling* t = nullptr;
  ~Tiling() { ds_tiling_free(t); }
};

ds_geometry geometry_of(const std::string& name) {
  if (name == "euclidean") return DS_EUCLIDEAN;
  if (name == "sphere") return DS_SPHERE;
  if (name == "hyperbolic" || name == "hyperbolic-poincare") return DS_HYPERBOLIC;
  throw InputError("unknown geometry \"" + name + "\"");
}

ds_render_options render_options(const Options& o) {
  ds_render_options r{};
  r.size = 800.0;
  r.labels = 1;
  if (!o.view_dir.empty()) {
    for (int i = 0; i < 3; ++i) r.view_dir[i] = o.view_dir[static_cast<std::size_t>(i)];
    if (r.view_dir[0] == 0.0 && r.view_dir[1] == 0.0 && r.view_dir[2] == 0.0) {
      throw InputError("--view-dir must be nonzero");
    }
  }
  return r;
}

std::vector<double> polygon_xy(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("/vertices: expected an array");
  }
  std::vector<double> xy;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const auto& v = j["vertices"][i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw InputError("/vertices/" + std::to_string(i) + ": expected 2 numbers");
    }
    xy.push_back(v[0].get<double>());
    xy.push_back(v[1].get<double>());
  }
  return xy;
}

std::string cap_json(const ds_cap& c) {
  nlohmann::ordered_json j{{"apex", {c.apex[0], c.apex[1]}},
                           {"contact1", {c.contact1[0], c.contact1[1]}},
                           {"contact2", {c.contact2[0], c.contact2[1]}},
                           {"side1", c.side1},
                           {"side2", c.side2},
                           {"angle", c.angle}};
  return j.dump(2) + "\n";
}

int run_tile(const Options& o) {
  Packing pk;
  check(ds_packing_parse(read_file(o.input).c_str(), &pk.p));
  if (!o.geometry.empty()) {
    ds_geometry g;
    check(ds_packing_geometry(pk.p, &g));
    if (g != geometry_of(o.geometry)) throw InputError("--geometry does not match the packing");
  }
  Tiling tl;
  check(ds_tiling_build(pk.p, o.clip_radius, &tl.t));
  const ds_status st = ds_verify(pk.p, tl.t, o.tol);
  if (st != DS_OK && st != DS_ERR_VERIFICATION_FAILED) check(st);
  char* s = nullptr;
  if (!o.out.empty()) {
    check(ds_tiling_to_json(tl.t, &s));
    write_atomic(o.out, take(s));
  }
  if (!o.svg.empty()) {
    const ds_render_options r = render_options(o);
    check(ds_render_svg(pk.p, tl.t, &r, &s));
    write_atomic(o.svg, take(s));
  }
  if (st == DS_ERR_VERIFICATION_FAILED) {
    std::cerr << "verification failed: " << ds_last_error() << "\n";
    return kExitFailed;
  }
  std::cerr << "tiling verified\n";
  return kExitOk;
}

int run_verify(const Options& o) {
  Packing pk;
  check(ds_packing_parse(read_file(o.packing).c_str(), &pk.p));
  Tiling tl;
  check(ds_tiling_parse(read_file(o.tiling).c_str(), &tl.t));
  const ds_status st = ds_verify(pk.p, tl.t, o.tol);
  if (st == DS_ERR_VERIFICATION_FAILED) {
    std::cerr << "verification failed: " << ds_last_error() << "\n";
    return kExitFailed;
  }
  check(st);
  std::cerr << "tiling verified\n";
  return kExitOk;
}

int run_caps(const Options& o) {
  const auto xy = polygon_xy(read_file(o.disc));
  ds_cap cap{};
  if (o.alpha != 0.0) {
    check(ds_caps_isosceles(xy.data(), xy.size() / 2, o.alpha, &cap));
    std::cerr << "isosceles cap: side " << cap.side1 << "\n";
  } else {
    int found = 0;
    check(ds_caps_non_isosceles(xy.data(), xy.size() / 2, o.margin, &cap, &found));
    if (!found) {
      std::cerr << "no non-isosceles cap above margin " << o.margin << "\n";
      return kExitFailed;
    }
    std::cerr << "non-isosceles cap: sides " << cap.side1 << " and " << cap.side2 << "\n";
  }
  if (!o.out.empty()) write_atomic(o.out, cap_json(cap));
  return kExitOk;
}

int run_counterexample(const Options& o) {
  Packing pk;
  int certified = 0;
  check(ds_counterexample(read_file(o.disc).c_str(), &pk.p, &certified));
  char* s = nullptr;
  if (!o.out.empty()) {
    check(ds_packing_to_json(pk.p, &s));
    write_atomic(o.out, take(s));
  }
  if (!o.svg.empty()) {
    const ds_render_options r = render_options(o);
    check(ds_render_svg(pk.p, nullptr, &r, &s));
    write_atomic(o.svg, take(s));
  }
  if (!certified) {
    std::cerr << "certificate failed: some consecutive pair is separable\n";
    return kExitFailed;
  }
  std::cerr << "certificate passed: all consecutive pairs infeasible\n";
  return kExitOk;
}

int run_gen(const Options& o) {
  Packing pk;
  check(ds_packing_generate(geometry_of(o.geometry), o.n, o.rmin, o.rmax, o.seed, &pk.p));
  char* s = nullptr;
  check(ds_packing_to_json(pk.p, &s));
  write_atomic(o.out, take(s));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating tilings of disc packings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ds_version()));
  Options o;

  const auto tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "verification tolerance")->check(CLI::Range(1e-15, 1e-3));
  };
  const auto render = [&](CLI::App* sub) {
    sub->add_option("--svg", o.svg, "write an SVG figure");
    sub->add_option("--view-dir", o.view_dir, "sphere view direction x,y,z")
        ->expected(3)
        ->delimiter(',');
  };

  auto* tile = app.add_subcommand("tile", "build and verify the separating diagram");
  tile->add_option("--input", o.input, "packing JSON")->required();
  tile->add_option("--geometry", o.geometry, "expected geometry")
      ->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic", "hyperbolic-poincare"}));
  tile->add_option("--out", o.out, "tiling JSON");
  tile->add_option("--clip-radius", o.clip_radius, "hyperbolic clip radius")
      ->check(CLI::PositiveNumber);
  tol(tile);
  render(tile);

  auto* verify = app.add_subcommand("verify", "check a tiling against a packing");
  verify->add_option("--packing", o.packing, "packing JSON")->required();
  verify->add_option("--tiling", o.tiling, "tiling JSON")->required();
  tol(verify);

  auto* caps = app.add_subcommand("caps", "cap searches on a convex polygon");
  caps->add_option("--disc", o.disc, "polygon JSON")->required();
  caps->add_option("--alpha", o.alpha, "isosceles cap angle in (0, pi)")
      ->check(CLI::Range(1e-9, 3.141592653589793));
  caps->add_option("--margin", o.margin, "non-isosceles margin")->check(CLI::Range(0.0, 1.0));
  caps->add_option("--out", o.out, "cap JSON");

  auto* cx = app.add_subcommand("counterexample", "non-separable packing of polygon copies");
  cx->add_option("--disc", o.disc, "polygon JSON")->required();
  cx->add_option("--out", o.out, "packing JSON with certificate");
  render(cx);

  auto* gen = app.add_subcommand("gen", "random packing");
  gen->add_option("--geometry", o.geometry, "geometry")
      ->required()
      ->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic", "hyperbolic-poincare"}));
  gen->add_option("--n", o.n, "number of discs")->required()->check(CLI::PositiveNumber);
  gen->add_option("--rmin", o.rmin, "smallest radius")->required();
  gen->add_option("--rmax", o.rmax, "largest radius")->required();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--out", o.out, "packing JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*tile) return run_tile(o);
    if (*verify) return run_verify(o);
    if (*caps) return run_caps(o);
    if (*cx) return run_counterexample(o);
    if (*gen) return run_gen(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
