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

#include "chordspace/chord_sets.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>
#include <vector>

namespace chordspace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double parse_number(std::string_view text, std::string_view spec) {
  const std::string owned(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw InvalidParameter("bad number '" + owned + "' in set spec '" + std::string(spec) + "'");
  }
  if (used != owned.size() || !std::isfinite(value)) {
    throw InvalidParameter("bad number '" + owned + "' in set spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<double> parse_numbers(std::string_view text, std::string_view spec) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_number(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos), spec));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParameter(std::string(name) + " must be positive, got " + std::to_string(v));
  }
}

}  // namespace

ChordSetId parse_chord_set(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  if (kind == "full" && !has_args) {
    return FullSpace{};
  }
  if (kind == "bertrand" && !has_args) {
    return BertrandSet{};
  }
  if (has_args) {
    const auto values = parse_numbers(args, spec);
    if (kind == "tube" && values.size() == 1) {
      return TubeSet{values[0]};
    }
    if (kind == "samearc" && values.size() == 1) {
      return SameArc{values[0]};
    }
    if (kind == "rect" && values.size() == 2) {
      return ArcRectangle{values[0], values[1]};
    }
  }
  throw InvalidParameter("unknown set spec '" + std::string(spec) +
                         "' (expected tube:γ, rect:γ1,γ2, samearc:γ, full or bertrand)");
}

std::string to_string(const ChordSetId& id) {
  return std::visit(Overloaded{
                        [](const TubeSet& s) { return "tube:" + format_number(s.gamma); },
                        [](const ArcRectangle& s) {
                          return "rect:" + format_number(s.gamma1) + "," + format_number(s.gamma2);
                        },
                        [](const SameArc& s) { return "samearc:" + format_number(s.gamma); },
                        [](const FullSpace&) { return std::string("full"); },
                        [](const BertrandSet&) { return std::string("bertrand"); },
                    },
                    id);
}

void validate(const ChordSetId& id, const CircleConfig& cfg) {
  const double half = std::numbers::pi * cfg.radius();
  std::visit(Overloaded{
                 [&](const TubeSet& s) {
                   require_positive(s.gamma, "tube arc length");
                   if (s.gamma > half) {
                     throw InvalidParameter("tube arc length exceeds πR; the arcs would overlap");
                   }
                 },
                 [&](const ArcRectangle& s) {
                   require_positive(s.gamma1, "first arc length");
                   require_positive(s.gamma2, "second arc length");
                   if (s.gamma1 + s.gamma2 > 2.0 * half) {
                     throw InvalidParameter("arc lengths sum past the circumference");
                   }
                 },
                 [&](const SameArc& s) {
                   require_positive(s.gamma, "arc length");
                   if (s.gamma >= 2.0 * half) {
                     throw InvalidParameter("same-arc length must be below the circumference");
                   }
                 },
                 [](const FullSpace&) {},
                 [](const BertrandSet&) {},
             },
             id);
}

Tube canonical_tube(double gamma1, double gamma2, const CircleConfig& cfg) {
  validate(ArcRectangle{gamma1, gamma2}, cfg);
  const double t1 = gamma1 / cfg.radius();
  const double t2 = gamma2 / cfg.radius();
  const double start2 = t1 + 0.5 * (kTwoPi - t1 - t2);
  return Tube(Arc(0.0, t1), Arc(start2, start2 + t2), true);
}

ChordPredicate membership(const ChordSetId& id, const CircleConfig& cfg) {
  validate(id, cfg);
  return std::visit(Overloaded{
                        [&](const TubeSet& s) -> ChordPredicate {
                          const Tube t = canonical_tube(s.gamma, s.gamma, cfg);
                          return [t](const Chord& c) { return tube_contains(t, c); };
                        },
                        [&](const ArcRectangle& s) -> ChordPredicate {
                          const Tube t = canonical_tube(s.gamma1, s.gamma2, cfg);
                          return [t](const Chord& c) { return tube_contains(t, c); };
                        },
                        [&](const SameArc& s) -> ChordPredicate {
                          const Arc arc(0.0, s.gamma / cfg.radius());
                          return [arc](const Chord& c) { return arc.contains(c.a(), true) && arc.contains(c.b(), true); };
                        },
                        [](const FullSpace&) -> ChordPredicate { return [](const Chord&) { return true; }; },
                        [](const BertrandSet&) -> ChordPredicate {
                          return [](const Chord& c) { return is_bertrand(c); };
                        },
                    },
                    id);
}

}  // namespace chordspace
