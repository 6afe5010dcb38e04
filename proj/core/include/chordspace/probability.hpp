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
 * @file   probability.hpp
 * @brief  Probability space Pr = H²/H²(X) on chords and Monte Carlo
 *         estimation under several chord-sampling schemes.
 *
 * Under H² the chord space is uniform in the arc-length coordinates of the
 * two endpoints, so drawing a chord means drawing a point of the triangle
 * {0 ≤ x < y < 2πR}. The three classical schemes (random endpoints, random
 * radius, random midpoint) are provided as baselines.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "chordspace/chord_sets.hpp"
#include "chordspace/geometry.hpp"
#include "chordspace/rng.hpp"
#include "chordspace/tube.hpp"

namespace chordspace {

enum class SamplerKind {
  /// Uniform point of the arc-length triangle.
  H2Uniform,
  /// Two independent uniform points of the circle. Same law as H2Uniform.
  RandomEndpoints,
  /// Uniform direction, uniform distance along the radius.
  RandomRadius,
  /// Uniform midpoint in the disk.
  RandomMidpoint,
};

/// "h2", "endpoints", "radius", "midpoint".
[[nodiscard]] std::string_view to_string(SamplerKind kind) noexcept;
[[nodiscard]] std::optional<SamplerKind> parse_sampler_kind(std::string_view name) noexcept;

struct SampleBatch {
  SamplerKind kind = SamplerKind::H2Uniform;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::uint64_t hits = 0;
  double p_hat = 0.0;
  /// Wilson score interval at 95%.
  std::pair<double, double> ci95{0.0, 0.0};
};

/// Arc-length coordinates of a chord's endpoints, 0 ≤ x < y < 2πR.
struct ParamPoint {
  double x = 0.0;
  double y = 0.0;
};

/// exact_measure(id) / 2π²R².
[[nodiscard]] double probability(const ChordSetId& id, const CircleConfig& cfg);

/// Draws one chord. Null events (coincident endpoints, a midpoint at the
/// centre, a radius offset of exactly ±R) are redrawn.
[[nodiscard]] Chord sample_chord(SamplerKind kind, RandomStream& rng);

[[nodiscard]] ParamPoint chord_to_param(const Chord& c, const CircleConfig& cfg) noexcept;
/// Throws InvalidParameter unless 0 ≤ x < y < 2πR.
[[nodiscard]] Chord param_to_chord(ParamPoint p, const CircleConfig& cfg);

/// Wilson score interval for `hits` successes out of `n` trials at z = 1.96.
[[nodiscard]] std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n);

/// Samples per substream. Sample i of a run is drawn from substream
/// i / kSamplesPerStream, so results do not depend on the worker count.
inline constexpr std::uint64_t kSamplesPerStream = 1u << 16;

struct McOptions {
  unsigned jobs = 1;
};

/// Monte Carlo estimate of Pr(event) under the sampler. Throws
/// InvalidParameter for n = 0.
[[nodiscard]] SampleBatch mc_probability(SamplerKind kind, const ChordPredicate& event, std::uint64_t n,
                                         std::uint64_t seed, const McOptions& options = {});

/// Fraction of H²-uniform chords that fall in the tube.
[[nodiscard]] SampleBatch empirical_tube_probability(const Tube& t, std::uint64_t n, std::uint64_t seed,
                                                     const McOptions& options = {});

/// Calls `visit(chord)` for the first n chords of the deterministic sequence
/// used by mc_probability with the same kind and seed.
template <class Visitor>
void for_each_sample(SamplerKind kind, std::uint64_t n, std::uint64_t seed, Visitor&& visit) {
  for (std::uint64_t first = 0, stream = 0; first < n; first += kSamplesPerStream, ++stream) {
    RandomStream rng(seed, stream);
    const std::uint64_t last = (n - first < kSamplesPerStream) ? n : first + kSamplesPerStream;
    for (std::uint64_t i = first; i < last; ++i) {
      visit(sample_chord(kind, rng));
    }
  }
}

}  // namespace chordspace
