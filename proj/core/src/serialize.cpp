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

#include "chordspace/serialize.hpp"

#include <charconv>
#include <ostream>
#include <string>

namespace chordspace {

namespace {

// Shortest representation that reads back to the same double.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void to_json(nlohmann::json& j, const Chord& c) { j = {{"a", c.a().value()}, {"b", c.b().value()}}; }

void to_json(nlohmann::json& j, const Arc& a) { j = {{"start", a.start().value()}, {"end", a.end().value()}}; }

void to_json(nlohmann::json& j, const Tube& t) {
  j = {{"arc1", t.arc1()}, {"arc2", t.arc2()}, {"closed", t.closed()}};
}

Tube tube_from_json(const nlohmann::json& j) {
  auto arc = [](const nlohmann::json& a) { return Arc(a.at("start").get<double>(), a.at("end").get<double>()); };
  return Tube(arc(j.at("arc1")), arc(j.at("arc2")), j.value("closed", true));
}

void to_json(nlohmann::json& j, const CoveringEstimate& e) {
  j = {{"epsilon", e.epsilon},
       {"s", e.s},
       {"n_subdivisions", e.n_subdivisions},
       {"upper_bound", e.upper_bound},
       {"lower_bound", e.lower_bound}};
}

void to_json(nlohmann::json& j, const MeasureReport& r) {
  j = {{"set", to_string(r.set)},
       {"exact_value", r.exact_value},
       {"estimates", r.estimates},
       {"converged", r.converged}};
}

void to_json(nlohmann::json& j, const DimensionEstimate& d) {
  j = {{"s_estimate", d.s_estimate}, {"epsilons", d.epsilons}, {"counts", d.counts}, {"fit_residual", d.fit_residual}};
}

void to_json(nlohmann::json& j, const SampleBatch& b) {
  j = {{"kind", std::string(to_string(b.kind))},
       {"seed", b.seed},
       {"n", b.n},
       {"hits", b.hits},
       {"p_hat", b.p_hat},
       {"ci95", {b.ci95.first, b.ci95.second}}};
}

void write_estimates_csv(std::ostream& out, std::span<const CoveringEstimate> estimates) {
  out << "epsilon,n_subdivisions,lower_bound,upper_bound\n";
  for (const auto& e : estimates) {
    out << fmt(e.epsilon) << ',' << e.n_subdivisions << ',' << fmt(e.lower_bound) << ',' << fmt(e.upper_bound)
        << '\n';
  }
}

void write_dimension_csv(std::ostream& out, const DimensionEstimate& d) {
  out << "epsilon,count\n";
  for (std::size_t i = 0; i < d.epsilons.size(); ++i) {
    out << fmt(d.epsilons[i]) << ',' << d.counts[i] << '\n';
  }
}

void write_chord_csv_header(std::ostream& out) { out << "a,b,length,is_bertrand\n"; }

void write_chord_csv_row(std::ostream& out, const Chord& c, const CircleConfig& cfg) {
  out << fmt(c.a().value()) << ',' << fmt(c.b().value()) << ',' << fmt(chord_length(c, cfg)) << ','
      << (is_bertrand(c) ? 1 : 0) << '\n';
}

}  // namespace chordspace
