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

#include "chordspace/tube.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace chordspace {

namespace {

// Angular slack for comparisons between quantities that went through
// canonical_angle independently.
constexpr double kAngleSlack = 1e-12;

void require_equal_arcs(const Tube& t, const char* what) {
  const double l1 = t.arc1().angular_length();
  const double l2 = t.arc2().angular_length();
  if (std::abs(l1 - l2) > kAngleSlack) {
    throw PreconditionViolated(std::string(what) + ": tube arcs differ in length (" + std::to_string(l1) +
                               " vs " + std::to_string(l2) + " rad)");
  }
}

}  // namespace

Tube::Tube(Arc arc1, Arc arc2, bool closed) : arc1_(arc1), arc2_(arc2), closed_(closed) {
  const double l1 = arc1_.angular_length();
  const double l2 = arc2_.angular_length();
  const double gap = canonical_angle(arc2_.start().value() - arc1_.start().value());
  if (gap < l1 - kAngleSlack || gap + l2 > kTwoPi + kAngleSlack) {
    throw InvalidParameter("tube arcs overlap");
  }
}

Ball::Ball(Chord center, double radius, bool closed) : center_(center), radius_(radius), closed_(closed) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidParameter("ball radius must be finite and positive");
  }
}

bool tube_contains(const Tube& t, const Chord& c) {
  const bool closed = t.closed();
  return (t.arc1().contains(c.a(), closed) && t.arc2().contains(c.b(), closed)) ||
         (t.arc2().contains(c.a(), closed) && t.arc1().contains(c.b(), closed));
}

bool tube_in_half_circle(const Tube& t) {
  // Angular extent of the cap cut off by each bounding chord. Both chords
  // are on one side of the parallel diameter iff one cap is at least a
  // half circle.
  const double cap1 = canonical_angle(t.arc2().start().value() - t.arc1().end().value());
  const double cap2 = canonical_angle(t.arc1().start().value() - t.arc2().end().value());
  return std::max(cap1, cap2) >= std::numbers::pi - kAngleSlack;
}

double tube_diameter(const Tube& t, const CircleConfig& cfg) {
  require_equal_arcs(t, "tube_diameter");
  if (!tube_in_half_circle(t)) {
    throw UnsupportedGeometry("tube_diameter: tube contains a diameter of the circle");
  }
  const double gamma = t.arc1().length(cfg);
  return 2.0 * cfg.radius() * std::sin(gamma / (2.0 * cfg.radius()));
}

Tube ball_to_tube(const Ball& b, const CircleConfig& cfg) {
  const double r = cfg.radius();
  if (b.radius() >= 2.0 * r) {
    throw BallTooLarge("ball radius reaches the circle diameter");
  }
  const double half_width = 2.0 * std::asin(b.radius() / (2.0 * r));
  if (2.0 * half_width >= central_angle(b.center())) {
    throw BallTooLarge("endpoint neighbourhoods of radius " + std::to_string(b.radius()) + " overlap");
  }
  const double a = b.center().a().value();
  const double c = b.center().b().value();
  return Tube(Arc(a - half_width, a + half_width), Arc(c - half_width, c + half_width), b.closed());
}

Ball tube_center_and_radius(const Tube& t, const CircleConfig& cfg) {
  require_equal_arcs(t, "tube_center_and_radius");
  const double quarter = 0.25 * t.arc1().angular_length();
  const double radius = 2.0 * cfg.radius() * std::sin(quarter);
  return Ball(Chord(t.arc1().midpoint(), t.arc2().midpoint()), radius, t.closed());
}

}  // namespace chordspace
