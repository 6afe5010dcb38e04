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

// JSON and CSV forms of the library's value types.
//
//   Chord            {"a": rad, "b": rad}
//   Arc              {"start": rad, "end": rad}
//   Tube             {"arc1": Arc, "arc2": Arc, "closed": bool}
//   CoveringEstimate {"epsilon", "s", "n_subdivisions", "upper_bound", "lower_bound"}
//   MeasureReport    {"set": "tube:0.5", "exact_value", "estimates": [...], "converged"}
//   DimensionEstimate{"s_estimate", "epsilons": [...], "counts": [...], "fit_residual"}
//   SampleBatch      {"kind": "h2", "seed", "n", "hits", "p_hat", "ci95": [lo, hi]}

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "chordspace/geometry.hpp"
#include "chordspace/measure.hpp"
#include "chordspace/probability.hpp"
#include "chordspace/tube.hpp"

namespace chordspace {

void to_json(nlohmann::json& j, const Chord& c);

void to_json(nlohmann::json& j, const Arc& a);
void to_json(nlohmann::json& j, const Tube& t);
[[nodiscard]] Tube tube_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CoveringEstimate& e);
void to_json(nlohmann::json& j, const MeasureReport& r);
void to_json(nlohmann::json& j, const DimensionEstimate& d);
void to_json(nlohmann::json& j, const SampleBatch& b);

/// Header `epsilon,n_subdivisions,lower_bound,upper_bound` and one row per
/// estimate.
void write_estimates_csv(std::ostream& out, std::span<const CoveringEstimate> estimates);
/// Header `epsilon,count` and one row per scale.
void write_dimension_csv(std::ostream& out, const DimensionEstimate& d);
/// Header `a,b,length,is_bertrand`.
void write_chord_csv_header(std::ostream& out);
void write_chord_csv_row(std::ostream& out, const Chord& c, const CircleConfig& cfg);

}  // namespace chordspace

// Chord has no default constructor, so it needs an adl_serializer to be
// read with j.get<Chord>().
template <>
struct nlohmann::adl_serializer<chordspace::Chord> {
  static chordspace::Chord from_json(const json& j) {
    return chordspace::Chord(j.at("a").get<double>(), j.at("b").get<double>());
  }
  static void to_json(json& j, const chordspace::Chord& c) { chordspace::to_json(j, c); }
};
