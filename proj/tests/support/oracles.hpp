// Copyright 2026 The chordspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the library code they check, apart from the
// plain-data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

struct Xy {
  double x;
  double y;
};

inline Xy on_circle(double angle, double radius) { return {radius * std::cos(angle), radius * std::sin(angle)}; }

// Discrete Hausdorff distance between two segments, each sampled at
// `samples` evenly spaced points (endpoints included). The nearest sample
// of a collinear, evenly spaced set is found by rounding the projection
// parameter, which is exact for that point set, so the cost is linear.
inline double sampled_hausdorff(Xy p0, Xy p1, Xy q0, Xy q1, int samples) {
  auto directed = [samples](Xy a0, Xy a1, Xy b0, Xy b1) {
    const double bx = b1.x - b0.x;
    const double by = b1.y - b0.y;
    const double len2 = bx * bx + by * by;
    const int last = samples - 1;
    double worst = 0.0;
    for (int i = 0; i <= last; ++i) {
      const double t = static_cast<double>(i) / last;
      const Xy p{a0.x + t * (a1.x - a0.x), a0.y + t * (a1.y - a0.y)};
      const double u = ((p.x - b0.x) * bx + (p.y - b0.y) * by) / len2;
      const double k = std::clamp(std::round(u * last), 0.0, static_cast<double>(last));
      double best = INFINITY;
      for (double kk : {k - 1.0, k, k + 1.0}) {
        if (kk < 0.0 || kk > last) {
          continue;
        }
        const double s = kk / last;
        best = std::min(best, std::hypot(p.x - (b0.x + s * bx), p.y - (b0.y + s * by)));
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(p0, p1, q0, q1), directed(q0, q1, p0, p1));
}

inline double sampled_chord_hausdorff(double a1, double b1, double a2, double b2, double radius, int samples) {
  return sampled_hausdorff(on_circle(a1, radius), on_circle(b1, radius), on_circle(a2, radius),
                           on_circle(b2, radius), samples);
}

// Chord central angle from raw endpoint angles.
inline double tent(double d) {
  d = std::fmod(std::abs(d), kTau);
  return std::min(d, kTau - d);
}

// Minimum central angle over chords joining closed arcs [x0, x1] and
// [y0, y1]. The difference y − x sweeps the interval [y0 − x1, y1 − x0]
// and the tent function has no interior minimum on an interval shorter
// than 2π that avoids its zeros, so the ends of that interval decide.
inline double min_central_angle(double x0, double x1, double y0, double y1) {
  const double lo = y0 - x1;
  const double hi = y1 - x0;
  double best = std::min(tent(lo), tent(hi));
  // A multiple of 2π inside the sweep means the arcs share a point.
  for (int k = -2; k <= 2; ++k) {
    if (lo < k * kTau && k * kTau < hi) {
      best = 0.0;
    }
  }
  return best;
}

// Unordered pairs of distinct arcs of the n-arc partition whose whole
// open tube consists of chords with central angle above 2π/3: the
// infimum over the closed arcs is at least 2π/3, up to rounding.
inline std::int64_t bertrand_pairs_by_geometry(std::int64_t n) {
  const double h = kTau / static_cast<double>(n);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double m = min_central_angle(i * h, (i + 1) * h, j * h, (j + 1) * h);
      if (m >= kTau / 3.0 - 1e-9) {
        ++count;
      }
    }
  }
  return count;
}

// Term-by-term dyadic series Σ_{k=1..m} 2^{k−1} γ² / 4^k.
inline double same_arc_series(double gamma, int m) {
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) {
    sum += std::ldexp(1.0, k - 1) * gamma * gamma / std::ldexp(1.0, 2 * k);
  }
  return sum;
}

// Two-sample Kolmogorov–Smirnov statistic.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) {
      ++i;
    }
    while (j < b.size() && b[j] == v) {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

// Asymptotic two-sample KS critical value at level alpha.
inline double ks_critical(double alpha, std::size_t n, std::size_t m) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * static_cast<double>(m)));
}

// Uniform random chord angles from std::mt19937_64, independent of the
// library's generator.
class ChordSource {
 public:
  explicit ChordSource(std::uint64_t seed) : gen_(seed) {}
  std::pair<double, double> next() {
    while (true) {
      const double a = angle_(gen_);
      const double b = angle_(gen_);
      if (a != b) {
        return {a, b};
      }
    }
  }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> angle_{0.0, kTau};
};

}  // namespace oracle
