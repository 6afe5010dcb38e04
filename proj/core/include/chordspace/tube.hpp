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

#include "chordspace/geometry.hpp"

namespace chordspace {

/// Set of chords with one endpoint on each of two arcs.
///
/// Going counterclockwise the boundary points appear as arc1.start,
/// arc1.end, arc2.start, arc2.end. The two bounding chords are
/// (arc1.end, arc2.start) and (arc2.end, arc1.start). The arcs may touch at
/// an endpoint; such a tube is degenerate (one bounding chord is a point).
class Tube {
 public:
  /// Throws InvalidParameter if the arcs overlap.
  Tube(Arc arc1, Arc arc2, bool closed = true);

  [[nodiscard]] const Arc& arc1() const noexcept { return arc1_; }
  [[nodiscard]] const Arc& arc2() const noexcept { return arc2_; }
  [[nodiscard]] bool closed() const noexcept { return closed_; }

  friend bool operator==(const Tube&, const Tube&) = default;

 private:
  Arc arc1_;
  Arc arc2_;
  bool closed_;
};

/// Metric ball {χ' : ρ(χ, χ') ≤ ε} (closed) or < ε (open).
class Ball {
 public:
  /// Throws InvalidParameter unless radius is finite and positive.
  Ball(Chord center, double radius, bool closed = true);

  [[nodiscard]] const Chord& center() const noexcept { return center_; }
  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] bool closed() const noexcept { return closed_; }

 private:
  Chord center_;
  double radius_;
  bool closed_;
};

[[nodiscard]] bool tube_contains(const Tube& t, const Chord& c);

/// Diameter 2R·sin(γ/2R) of a tube whose arcs both have length γ and lie on
/// one closed half of the circle cut by the diameter parallel to the
/// bounding chords.
///
/// Throws PreconditionViolated for unequal arcs and UnsupportedGeometry
/// when the tube contains a diameter.
[[nodiscard]] double tube_diameter(const Tube& t, const CircleConfig& cfg);

/// True when the bounding chords sit on the same side of their parallel
/// diameter, i.e. the tube contains no diameter of the circle.
[[nodiscard]] bool tube_in_half_circle(const Tube& t);

/// Tube whose arcs are the chordal ε-neighbourhoods of the ball centre's
/// endpoints (angular half-width 2·asin(ε/2R)).
///
/// Throws BallTooLarge when the two neighbourhoods would overlap.
[[nodiscard]] Tube ball_to_tube(const Ball& b, const CircleConfig& cfg);

/// Ball with centre at the chord joining the arc midpoints and radius
/// 2R·sin(γ/4R), the distance from an arc midpoint to its ends.
///
/// Throws PreconditionViolated for unequal arcs.
[[nodiscard]] Ball tube_center_and_radius(const Tube& t, const CircleConfig& cfg);

}  // namespace chordspace
