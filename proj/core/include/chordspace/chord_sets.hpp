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

#include <functional>
#include <string>
#include <string_view>
#include <variant>

#include "chordspace/geometry.hpp"
#include "chordspace/tube.hpp"

namespace chordspace {

// Chord sets with a closed-form two-dimensional measure. Lengths (gamma)
// are arc lengths in the same unit as the circle radius.

/// Tube over two disjoint arcs of length gamma.
struct TubeSet {
  double gamma = 0.0;
};

/// Chords joining two disjoint arcs of lengths gamma1 and gamma2.
struct ArcRectangle {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// Chords with both endpoints on one arc of length gamma.
struct SameArc {
  double gamma = 0.0;
};

struct FullSpace {};

/// Chords longer than the side √3·R of the inscribed equilateral triangle.
struct BertrandSet {};

using ChordSetId = std::variant<TubeSet, ArcRectangle, SameArc, FullSpace, BertrandSet>;

using ChordPredicate = std::function<bool(const Chord&)>;

/// Parses "tube:γ", "rect:γ1,γ2", "samearc:γ", "full" or "bertrand".
/// Throws InvalidParameter on anything else.
[[nodiscard]] ChordSetId parse_chord_set(std::string_view spec);

/// Inverse of parse_chord_set (shortest round-trip number formatting).
[[nodiscard]] std::string to_string(const ChordSetId& id);

/// Throws InvalidParameter when the set cannot be placed on the circle:
/// nonpositive lengths, tube arcs longer than πR, rectangle arcs summing past
/// 2πR, or a same-arc length of 2πR or more.
void validate(const ChordSetId& id, const CircleConfig& cfg);

/// Tube used to place TubeSet and ArcRectangle on the circle: the first arc
/// starts at angle 0 and the second is centred in the remaining gap, so two
/// equal arcs sit at 0 and π.
[[nodiscard]] Tube canonical_tube(double gamma1, double gamma2, const CircleConfig& cfg);

/// Membership test for the canonical placement of the set.
[[nodiscard]] ChordPredicate membership(const ChordSetId& id, const CircleConfig& cfg);

}  // namespace chordspace
