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

/**
 * @file   geometry.hpp
 * @brief  Circle, angle, arc and chord primitives and the Hausdorff metric
 *         between chords.
 *
 * Chords are stored by their endpoint angles. Cartesian endpoints are
 * derived on demand for a given circle radius, so a single Chord value can
 * be reused across circles of different size.
 */

#include <compare>
#include <numbers>
#include <utility>

#include "chordspace/errors.hpp"

namespace chordspace {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Circle of radius R > 0 centred at the origin.
class CircleConfig {
 public:
  /// Throws InvalidParameter unless radius is finite and positive.
  explicit CircleConfig(double radius = 1.0);

  [[nodiscard]] double radius() const noexcept { return radius_; }
  /// 2πR.
  [[nodiscard]] double circumference() const noexcept { return kTwoPi * radius_; }

 private:
  double radius_;
};

/// Wraps any finite real into [0, 2π).
[[nodiscard]] double canonical_angle(double radians);

/// Angle in radians, canonicalized into [0, 2π).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(canonical_angle(radians)) {}

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr auto operator<=>(const Angle&, const Angle&) = default;

 private:
  double value_ = 0.0;
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2D&, const Point2D&) = default;
};

[[nodiscard]] double distance(Point2D p, Point2D q) noexcept;

/// Point of the circle at the given angle.
[[nodiscard]] Point2D point_on_circle(Angle angle, const CircleConfig& cfg) noexcept;

/// Counterclockwise arc from start to end. A zero-length arc (start == end)
/// is a single point; the full circle is not representable.
class Arc {
 public:
  Arc(Angle start, Angle end) : start_(start), end_(end) {}
  Arc(double start, double end) : Arc(Angle(start), Angle(end)) {}

  [[nodiscard]] Angle start() const noexcept { return start_; }
  [[nodiscard]] Angle end() const noexcept { return end_; }

  /// Angular extent in [0, 2π).
  [[nodiscard]] double angular_length() const;
  /// Arc length R·(end − start mod 2π).
  [[nodiscard]] double length(const CircleConfig& cfg) const { return cfg.radius() * angular_length(); }
  [[nodiscard]] Angle midpoint() const;

  /// Closed membership includes both end angles; open membership excludes them.
  [[nodiscard]] bool contains(Angle angle, bool closed) const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Angle start_;
  Angle end_;
};

/// Unordered pair of distinct points of the circle, stored as a < b.
class Chord {
 public:
  /// Throws DegenerateChord when both angles canonicalize to the same value.
  Chord(Angle a, Angle b);
  Chord(double a, double b) : Chord(Angle(a), Angle(b)) {}

  [[nodiscard]] Angle a() const noexcept { return a_; }
  [[nodiscard]] Angle b() const noexcept { return b_; }

  friend constexpr auto operator<=>(const Chord&, const Chord&) = default;

 private:
  Angle a_;
  Angle b_;
};

/// Same as the Chord constructor; kept as a free function for call sites that
/// read better as a conversion.
[[nodiscard]] inline Chord canonicalize_chord(Angle a, Angle b) { return Chord(a, b); }

[[nodiscard]] std::pair<Point2D, Point2D> endpoints(const Chord& c, const CircleConfig& cfg) noexcept;

/// Smaller of the two arcs cut off by the chord, in (0, π].
[[nodiscard]] double central_angle(const Chord& c) noexcept;

/// 2R·sin(central_angle / 2).
[[nodiscard]] double chord_length(const Chord& c, const CircleConfig& cfg) noexcept;

/// Euclidean distance from p to the closed segment [s0, s1].
[[nodiscard]] double point_segment_distance(Point2D p, Point2D s0, Point2D s1) noexcept;

/// Hausdorff distance between two segments given by their endpoints.
///
/// The distance from a point to a segment is convex along any other segment,
/// so each directed term max_{P∈χ} min_{Q∈χ'} |PQ| is reached at an endpoint
/// of χ and the whole metric reduces to four point-segment distances.
[[nodiscard]] double segment_hausdorff(Point2D p0, Point2D p1, Point2D q0, Point2D q1) noexcept;

/// Hausdorff distance between two chords of the same circle, in [0, 2R].
[[nodiscard]] double hausdorff_distance(const Chord& c1, const Chord& c2, const CircleConfig& cfg) noexcept;

/// Angle subtended by a side of the inscribed equilateral triangle.
inline constexpr double kBertrandAngle = kTwoPi / 3.0;

/// True iff the chord is strictly longer than √3·R, i.e. its central angle
/// exceeds 2π/3. The radius does not enter the decision.
[[nodiscard]] bool is_bertrand(const Chord& c) noexcept;
[[nodiscard]] inline bool is_bertrand(const Chord& c, const CircleConfig&) noexcept { return is_bertrand(c); }

}  // namespace chordspace
