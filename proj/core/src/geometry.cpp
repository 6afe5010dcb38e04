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

#include "chordspace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chordspace {

CircleConfig::CircleConfig(double radius) : radius_(radius) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw InvalidParameter("circle radius must be finite and positive, got " + std::to_string(radius));
  }
}

double canonical_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidParameter("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative value plus 2π rounds up to 2π.
  if (r >= kTwoPi) {
    r = 0.0;
  }
  return r;
}

double distance(Point2D p, Point2D q) noexcept { return std::hypot(p.x - q.x, p.y - q.y); }

Point2D point_on_circle(Angle angle, const CircleConfig& cfg) noexcept {
  return {cfg.radius() * std::cos(angle.value()), cfg.radius() * std::sin(angle.value())};
}

double Arc::angular_length() const { return canonical_angle(end_.value() - start_.value()); }

Angle Arc::midpoint() const { return Angle(start_.value() + 0.5 * angular_length()); }

bool Arc::contains(Angle angle, bool closed) const {
  const double len = angular_length();
  const double offset = canonical_angle(angle.value() - start_.value());
  if (closed) {
    return offset <= len;
  }
  return offset > 0.0 && offset < len;
}

Chord::Chord(Angle a, Angle b) : a_(std::min(a, b)), b_(std::max(a, b)) {
  if (a_ == b_) {
    throw DegenerateChord("chord endpoints coincide at angle " + std::to_string(a_.value()));
  }
}

std::pair<Point2D, Point2D> endpoints(const Chord& c, const CircleConfig& cfg) noexcept {
  return {point_on_circle(c.a(), cfg), point_on_circle(c.b(), cfg)};
}

double central_angle(const Chord& c) noexcept {
  const double d = c.b().value() - c.a().value();
  return std::min(d, kTwoPi - d);
}

double chord_length(const Chord& c, const CircleConfig& cfg) noexcept {
  return 2.0 * cfg.radius() * std::sin(0.5 * central_angle(c));
}

double point_segment_distance(Point2D p, Point2D s0, Point2D s1) noexcept {
  const double dx = s1.x - s0.x;
  const double dy = s1.y - s0.y;
  const double px = p.x - s0.x;
  const double py = p.y - s0.y;
  const double along = px * dx + py * dy;
  const double len2 = dx * dx + dy * dy;
  if (along <= 0.0 || len2 == 0.0) {
    return std::hypot(px, py);
  }
  if (along >= len2) {
    return std::hypot(p.x - s1.x, p.y - s1.y);
  }
  return std::abs(px * dy - py * dx) / std::sqrt(len2);
}

double segment_hausdorff(Point2D p0, Point2D p1, Point2D q0, Point2D q1) noexcept {
  return std::max({point_segment_distance(p0, q0, q1), point_segment_distance(p1, q0, q1),
                   point_segment_distance(q0, p0, p1), point_segment_distance(q1, p0, p1)});
}

double hausdorff_distance(const Chord& c1, const Chord& c2, const CircleConfig& cfg) noexcept {
  const auto [p0, p1] = endpoints(c1, cfg);
  const auto [q0, q1] = endpoints(c2, cfg);
  return segment_hausdorff(p0, p1, q0, q1);
}

bool is_bertrand(const Chord& c) noexcept { return central_angle(c) > kBertrandAngle; }

}  // namespace chordspace
