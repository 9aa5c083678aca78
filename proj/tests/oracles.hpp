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

// Test-side reference computations. These use different formulas from the
// library (angles instead of dot products, the Poincare distance instead of
// the Minkowski form, brute-force scans instead of closed forms) so that
// agreement means something.

#ifndef DISCSEP_TESTS_ORACLES_HPP_
#define DISCSEP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "discsep/euclidean.hpp"
#include "discsep/hyperbolic.hpp"
#include "discsep/spherical.hpp"

namespace oracle {

using discsep::Vec2;
using discsep::Vec3;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }
  Vec3 unit3() {
    const double z = uniform(-1.0, 1.0), phi = uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(1.0 - z * z);
    return discsep::normalized(Vec3{s * std::cos(phi), s * std::sin(phi), z});
  }

 private:
  std::mt19937_64 gen_;
};

// ---------------------------------------------------------------- plane

inline int power_argmin(std::span<const discsep::euclid::Disc> discs, const Vec2& p,
                        double* gap = nullptr) {
  int best = -1;
  double b1 = INFINITY, b2 = INFINITY;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const double dx = p.x - discs[i].center.x, dy = p.y - discs[i].center.y;
    const double pw = dx * dx + dy * dy - discs[i].radius * discs[i].radius;
    if (pw < b1) {
      b2 = b1;
      b1 = pw;
      best = static_cast<int>(i);
    } else if (pw < b2) {
      b2 = pw;
    }
  }
  if (gap) *gap = b2 - b1;
  return best;
}

// Convex hull (Andrew's monotone chain), counterclockwise, no collinear points.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  const auto turn = [](const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Hull of random points in an ellipse-shaped cloud: at least three corners.
inline std::vector<Vec2> random_convex_polygon(Rng& rng, int points) {
  for (;;) {
    const double ax = rng.uniform(0.5, 2.0), ay = rng.uniform(0.5, 2.0);
    std::vector<Vec2> cloud;
    for (int i = 0; i < points; ++i) {
      const double t = rng.uniform(0.0, 2.0 * M_PI), r = std::sqrt(rng.uniform());
      cloud.push_back({ax * r * std::cos(t), ay * r * std::sin(t)});
    }
    auto hull = convex_hull(cloud);
    if (hull.size() >= 3) return hull;
  }
}

// Some line a.x = c with |a| = 1 separating `first` (below, clearance) from
// `second` (above, clearance) while a ring vertex lies in the closed side of
// `first`; found by scanning 720 directions x 400 offsets.
inline bool sampled_separator(std::span<const Vec2> first, std::span<const Vec2> second,
                              std::span<const Vec2> ring, double clearance) {
  for (int ia = 0; ia < 720; ++ia) {
    const double th = 2.0 * M_PI * ia / 720.0;
    const Vec2 a{std::cos(th), std::sin(th)};
    double hi1 = -INFINITY, lo2 = INFINITY;
    for (const auto& p : first) hi1 = std::max(hi1, a.x * p.x + a.y * p.y);
    for (const auto& q : second) lo2 = std::min(lo2, a.x * q.x + a.y * q.y);
    if (!(lo2 - hi1 > 2.0 * clearance)) continue;
    double rmin = INFINITY;
    for (const auto& r : ring) rmin = std::min(rmin, a.x * r.x + a.y * r.y);
    for (int ic = 0; ic < 400; ++ic) {
      const double c = hi1 + clearance + (lo2 - hi1 - 2.0 * clearance) * (ic + 0.5) / 400.0;
      if (ring.empty() || rmin <= c) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- sphere

inline double angle3(const Vec3& a, const Vec3& b) {
  return std::acos(std::clamp(discsep::dot(a, b), -1.0, 1.0));
}

// cos(angular distance) / cos(r), evaluated through the angle.
inline double sphere_potential(const Vec3& u, const discsep::sphere::Disc& d) {
  return std::cos(angle3(u, d.center)) / std::cos(d.radius);
}

inline int sphere_argmax(std::span<const discsep::sphere::Disc> discs, const Vec3& u,
                         double* gap = nullptr) {
  int best = -1;
  double b1 = -INFINITY, b2 = -INFINITY;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const double v = sphere_potential(u, discs[i]);
    if (v > b1) {
      b2 = b1;
      b1 = v;
      best = static_cast<int>(i);
    } else if (v > b2) {
      b2 = v;
    }
  }
  if (gap) *gap = b1 - b2;
  return best;
}

// Same potential through the chord length: cos(angle) = 1 - |u - O|^2 / 2.
// Cheaper than going through acos; used by the large grid scans.
class ChordClassifier {
 public:
  explicit ChordClassifier(std::span<const discsep::sphere::Disc> discs) {
    for (const auto& d : discs) {
      centers_.push_back(d.center);
      inv_cos_.push_back(1.0 / std::cos(d.radius));
    }
  }
  int argmax(const Vec3& u, double* gap = nullptr) const {
    int best = -1;
    double b1 = -INFINITY, b2 = -INFINITY;
    for (std::size_t i = 0; i < centers_.size(); ++i) {
      const Vec3 d = u - centers_[i];
      const double v = (1.0 - 0.5 * (d.x * d.x + d.y * d.y + d.z * d.z)) * inv_cos_[i];
      if (v > b1) {
        b2 = b1;
        b1 = v;
        best = static_cast<int>(i);
      } else if (v > b2) {
        b2 = v;
      }
    }
    if (gap) *gap = b1 - b2;
    return best;
  }

 private:
  std::vector<Vec3> centers_;
  std::vector<double> inv_cos_;
};

// Fibonacci lattice on the unit sphere.
inline std::vector<Vec3> sphere_grid(int count) {
  std::vector<Vec3> out;
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double s = std::sqrt(1.0 - z * z);
    out.push_back({s * std::cos(golden * i), s * std::sin(golden * i), z});
  }
  return out;
}

// Roots in [0, 2π) of cos(x)/cos r1 - cos(x - d)/cos r2, where x is the
// angle from O1 along the great circle towards O2 and d = angle(O1, O2).
inline std::vector<double> equipotential_roots(double r1, double r2, double d,
                                               int samples = 100000) {
  const auto f = [&](double x) { return std::cos(x) / std::cos(r1) - std::cos(x - d) / std::cos(r2); };
  std::vector<double> roots;
  for (int i = 0; i < samples; ++i) {
    double a = 2.0 * M_PI * i / samples, b = 2.0 * M_PI * (i + 1) / samples;
    double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0.0) == (fb < 0.0) || fb == 0.0) continue;
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
      const double m = 0.5 * (a + b);
      const double fm = f(m);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

// ---------------------------------------------------------------- hyperbolic

// cosh of the distance in the Poincare disc.
inline double poincare_cosh_distance(const Vec2& p, const Vec2& q) {
  const double dx = p.x - q.x, dy = p.y - q.y;
  const double num = 2.0 * (dx * dx + dy * dy);
  const double den = (1.0 - p.x * p.x - p.y * p.y) * (1.0 - q.x * q.x - q.y * q.y);
  return 1.0 + num / den;
}

inline double poincare_distance(const Vec2& p, const Vec2& q) {
  return std::acosh(poincare_cosh_distance(p, q));
}

struct PoincareDisc {
  Vec2 center;
  double radius;
  double cosh_radius = std::cosh(radius);
};

inline int hyper_argmin(std::span<const PoincareDisc> discs, const Vec2& p, double* gap = nullptr) {
  int best = -1;
  double b1 = INFINITY, b2 = INFINITY;
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const double v = poincare_cosh_distance(p, discs[i].center) / discs[i].cosh_radius;
    if (v < b1) {
      b2 = b1;
      b1 = v;
      best = static_cast<int>(i);
    } else if (v < b2) {
      b2 = v;
    }
  }
  if (gap) *gap = b2 - b1;
  return best;
}

// Triangle area from its side lengths via the hyperbolic law of cosines.
inline double hyperbolic_triangle_area(double a, double b, double c) {
  const auto angle = [](double opp, double s1, double s2) {
    return std::acos(std::clamp(
        (std::cosh(s1) * std::cosh(s2) - std::cosh(opp)) / (std::sinh(s1) * std::sinh(s2)), -1.0,
        1.0));
  };
  return M_PI - angle(a, b, c) - angle(b, c, a) - angle(c, a, b);
}

}  // namespace oracle

#endif  // DISCSEP_TESTS_ORACLES_HPP_
