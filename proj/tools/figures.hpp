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

// Standalone SVG figures for the `plot` subcommand.

#include <span>
#include <string>

#include "chordspace/chordspace.hpp"

namespace chordspace::figures {

/// Circle, centre chord, the four arc ends A, B, C, D of the ε-neighbourhood
/// and the two bounding chords of the equivalent tube.
[[nodiscard]] std::string ball_svg(const Ball& ball, const CircleConfig& cfg);

/// Circle, both arcs, bounding chords and the centre chord.
[[nodiscard]] std::string tube_svg(const Tube& tube, const CircleConfig& cfg);

/// Sampled chords; Bertrand chords drawn in a highlight colour.
[[nodiscard]] std::string samples_svg(std::span<const Chord> chords, const CircleConfig& cfg);

/// Upper and lower covering bounds against log10(subdivisions) with the
/// exact value as a reference line.
[[nodiscard]] std::string convergence_svg(const MeasureReport& report);

}  // namespace chordspace::figures
