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

// chordspace command-line tool.
//
// Every command prints one JSON envelope
//   {"command": ..., "params": {...}, "result": ..., "elapsed_ms": int}
// on stdout, or CSV when --format csv is given. Exit status: 0 on success,
// 2 on invalid input, 1 on I/O or internal failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "chordspace/chordspace.hpp"
#include "figures.hpp"

namespace {

using nlohmann::json;
namespace cs = chordspace;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

// Raised when an output file cannot be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  double radius = 1.0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "json";
  std::string out;
};

struct Options {
  Common common;
  // dist
  std::string c1;
  std::string c2;
  // measure, dimension, plot convergence
  std::string set;
  std::string method = "exact";
  std::int64_t n = 256;
  double eps = 0.0;
  // bertrand, sample, plot samples
  std::string kind = "h2";
  std::uint64_t samples = 1000000;
  // dimension
  std::vector<double> eps_list{0.2, 0.1, 0.05, 0.025};
  // plot
  std::string what;
  std::string center;
  std::string arc1;
  std::string arc2;
};

std::pair<double, double> parse_pair(const std::string& text, const char* flag) {
  std::istringstream in(text);
  double first = 0.0;
  double second = 0.0;
  char comma = 0;
  if (!(in >> first >> comma >> second) || comma != ',' || !(in >> std::ws).eof()) {
    throw cs::InvalidParameter(std::string(flag) + " expects two comma-separated numbers, got '" + text + "'");
  }
  return {first, second};
}

cs::Chord parse_chord(const std::string& text, const char* flag) {
  const auto [a, b] = parse_pair(text, flag);
  return cs::Chord(a, b);
}

cs::SamplerKind parse_kind(const std::string& name) {
  const auto kind = cs::parse_sampler_kind(name);
  if (!kind) {
    throw cs::InvalidParameter("unknown sampler kind '" + name + "' (expected h2, endpoints, radius or midpoint)");
  }
  return *kind;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  file << content;
  file.close();
  if (!file) {
    throw IoError("failed writing '" + path + "'");
  }
}

// Writes to --out when given, else to stdout.
void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(common.out, text);
  }
}

json common_params(const Common& c) { return {{"radius", c.radius}}; }

// Covering-ladder depth implied by a target cell size.
std::int64_t subdivisions_for(const cs::ChordSetId& id, double eps, const cs::CircleConfig& cfg) {
  if (!(eps > 0.0)) {
    throw cs::InvalidParameter("--eps must be positive");
  }
  const double extent = std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, cs::TubeSet> || std::is_same_v<T, cs::SameArc>) {
          return s.gamma;
        } else if constexpr (std::is_same_v<T, cs::ArcRectangle>) {
          return std::max(s.gamma1, s.gamma2);
        } else {
          return cfg.circumference();
        }
      },
      id);
  return static_cast<std::int64_t>(std::ceil(extent / eps - 1e-9));
}

cs::MeasureReport run_measure(const Options& o, const cs::CircleConfig& cfg, json& params) {
  const cs::ChordSetId id = cs::parse_chord_set(o.set);
  cs::validate(id, cfg);
  cs::MeasureOptions mo;
  if (o.method == "exact") {
    mo.method = cs::MeasureMethod::Exact;
  } else if (o.method == "cover") {
    mo.method = cs::MeasureMethod::Cover;
  } else {
    throw cs::InvalidParameter("--method must be exact or cover");
  }
  mo.max_subdivisions = o.eps > 0.0 ? subdivisions_for(id, o.eps, cfg) : o.n;
  mo.jobs = o.common.jobs;
  params["set"] = cs::to_string(id);
  params["method"] = o.method;
  if (mo.method == cs::MeasureMethod::Cover) {
    params["n"] = mo.max_subdivisions;
  }
  return cs::measure_report(id, cfg, mo);
}

json cmd_dist(const Options& o, const cs::CircleConfig& cfg, json& params) {
  const cs::Chord c1 = parse_chord(o.c1, "--c1");
  const cs::Chord c2 = parse_chord(o.c2, "--c2");
  params["c1"] = c1;
  params["c2"] = c2;
  return {{"distance", cs::hausdorff_distance(c1, c2, cfg)}};
}

json cmd_measure(const Options& o, const cs::CircleConfig& cfg, json& params, std::string& csv) {
  const cs::MeasureReport report = run_measure(o, cfg, params);
  if (o.common.format == "csv") {
    std::ostringstream out;
    cs::write_estimates_csv(out, report.estimates);
    csv = out.str();
  }
  return report;
}

json cmd_bertrand(const Options& o, const cs::CircleConfig& cfg, json& params) {
  const cs::SamplerKind kind = parse_kind(o.kind);
  if (o.samples < 1) {
    throw cs::InvalidParameter("--samples must be at least 1");
  }
  params["kind"] = std::string(cs::to_string(kind));
  params["samples"] = o.samples;
  params["seed"] = o.common.seed;
  return cs::mc_probability(kind, cs::membership(cs::BertrandSet{}, cfg), o.samples, o.common.seed,
                            {o.common.jobs});
}

json cmd_dimension(const Options& o, const cs::CircleConfig& cfg, json& params, std::string& csv) {
  const cs::ChordSetId id = cs::parse_chord_set(o.set);
  cs::validate(id, cfg);
  params["set"] = cs::to_string(id);
  params["eps"] = o.eps_list;
  cs::DimensionOptions dopts;
  dopts.jobs = o.common.jobs;
  const cs::DimensionEstimate d = cs::dimension_estimate(cs::membership(id, cfg), o.eps_list, cfg, dopts);
  if (o.common.format == "csv") {
    std::ostringstream out;
    cs::write_dimension_csv(out, d);
    csv = out.str();
  }
  return d;
}

json cmd_sample(const Options& o, const cs::CircleConfig& cfg, json& params, std::string& csv) {
  const cs::SamplerKind kind = parse_kind(o.kind);
  params["kind"] = std::string(cs::to_string(kind));
  params["samples"] = o.samples;
  params["seed"] = o.common.seed;
  if (o.common.format == "csv") {
    std::ostringstream out;
    cs::write_chord_csv_header(out);
    cs::for_each_sample(kind, o.samples, o.common.seed,
                        [&](const cs::Chord& c) { cs::write_chord_csv_row(out, c, cfg); });
    csv = out.str();
    return nullptr;
  }
  json chords = json::array();
  cs::for_each_sample(kind, o.samples, o.common.seed, [&](const cs::Chord& c) {
    chords.push_back({{"a", c.a().value()},
                      {"b", c.b().value()},
                      {"length", cs::chord_length(c, cfg)},
                      {"is_bertrand", cs::is_bertrand(c)}});
  });
  return {{"chords", std::move(chords)}};
}

json cmd_plot(const Options& o, const cs::CircleConfig& cfg, json& params) {
  if (o.common.out.empty()) {
    throw cs::InvalidParameter("plot needs --out");
  }
  params["what"] = o.what;
  params["out"] = o.common.out;
  std::string svg;
  json result = {{"path", o.common.out}};
  if (o.what == "ball") {
    const cs::Ball ball(parse_chord(o.center, "--center"), o.eps, true);
    params["center"] = ball.center();
    params["eps"] = o.eps;
    svg = cs::figures::ball_svg(ball, cfg);
    result["tube"] = cs::ball_to_tube(ball, cfg);
  } else if (o.what == "tube") {
    const auto [s1, e1] = parse_pair(o.arc1, "--arc1");
    const auto [s2, e2] = parse_pair(o.arc2, "--arc2");
    const cs::Tube tube(cs::Arc(s1, e1), cs::Arc(s2, e2));
    params["tube"] = tube;
    svg = cs::figures::tube_svg(tube, cfg);
  } else if (o.what == "samples") {
    const cs::SamplerKind kind = parse_kind(o.kind);
    params["kind"] = std::string(cs::to_string(kind));
    params["samples"] = o.samples;
    params["seed"] = o.common.seed;
    std::vector<cs::Chord> chords;
    chords.reserve(o.samples);
    cs::for_each_sample(kind, o.samples, o.common.seed, [&](const cs::Chord& c) { chords.push_back(c); });
    std::uint64_t bertrand = 0;
    for (const auto& c : chords) {
      bertrand += cs::is_bertrand(c) ? 1 : 0;
    }
    svg = cs::figures::samples_svg(chords, cfg);
    result["chords"] = chords.size();
    result["bertrand"] = bertrand;
  } else if (o.what == "convergence") {
    Options cover = o;
    cover.method = "cover";
    const cs::MeasureReport report = run_measure(cover, cfg, params);
    svg = cs::figures::convergence_svg(report);
    result["report"] = report;
  } else {
    throw cs::InvalidParameter("--what must be ball, tube, samples or convergence");
  }
  write_file(o.common.out, svg);
  return result;
}

void add_common(CLI::App* sub, Common& c, bool with_out = true) {
  sub->add_option("--radius", c.radius, "Circle radius")->capture_default_str();
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--jobs", c.jobs, "Worker threads (results do not depend on it)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  if (with_out) {
    sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chords of a circle under the Hausdorff metric: distances, measures, probabilities, figures."};
  app.require_subcommand(1);
  Options o;

  auto* dist = app.add_subcommand("dist", "Hausdorff distance between two chords");
  add_common(dist, o.common);
  dist->add_option("--c1", o.c1, "First chord as a,b (radians)")->required();
  dist->add_option("--c2", o.c2, "Second chord as a,b (radians)")->required();

  auto* measure = app.add_subcommand("measure", "H2 measure of a chord set");
  add_common(measure, o.common);
  measure->add_option("--set", o.set, "tube:G | rect:G1,G2 | samearc:G | full | bertrand")->required();
  measure->add_option("--method", o.method, "exact or cover")->capture_default_str();
  measure->add_option("--n", o.n, "Finest subdivision of the covering ladder")->capture_default_str();
  measure->add_option("--eps", o.eps, "Finest cell size (overrides --n)");

  auto* bertrand = app.add_subcommand("bertrand", "Monte Carlo probability of a Bertrand chord");
  add_common(bertrand, o.common);
  bertrand->add_option("--kind", o.kind, "h2 | endpoints | radius | midpoint")->capture_default_str();
  bertrand->add_option("--samples", o.samples, "Number of samples")->capture_default_str();

  auto* dimension = app.add_subcommand("dimension", "Box-counting dimension of a chord set");
  add_common(dimension, o.common);
  dimension->add_option("--set", o.set, "Chord set spec")->required();
  dimension->add_option("--eps", o.eps_list, "Cell sizes, comma separated")->delimiter(',')->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Draw chords from a sampler");
  add_common(sample, o.common);
  sample->add_option("--kind", o.kind, "h2 | endpoints | radius | midpoint")->capture_default_str();
  sample->add_option("--samples", o.samples, "Number of chords")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Write an SVG figure");
  add_common(plot, o.common, false);
  plot->add_option("--out", o.common.out, "SVG output path")->required();
  plot->add_option("--what", o.what, "ball | tube | samples | convergence")->required();
  plot->add_option("--center", o.center, "Ball centre chord as a,b");
  plot->add_option("--eps", o.eps, "Ball radius");
  plot->add_option("--arc1", o.arc1, "First tube arc as start,end");
  plot->add_option("--arc2", o.arc2, "Second tube arc as start,end");
  plot->add_option("--kind", o.kind, "Sampler for --what samples")->capture_default_str();
  plot->add_option("--samples", o.samples, "Sample count for --what samples");
  plot->add_option("--set", o.set, "Chord set for --what convergence");
  plot->add_option("--n", o.n, "Finest subdivision for --what convergence")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  if (o.samples == 0 && (command == "bertrand" || command == "sample" || command == "plot")) {
    std::cerr << "error: --samples must be at least 1\n";
    return kExitInvalid;
  }
  if (plot->parsed() && !plot->count("--samples")) {
    o.samples = 500;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const cs::CircleConfig cfg(o.common.radius);
    json params = common_params(o.common);
    std::string csv;
    json result;
    if (command == "dist") {
      result = cmd_dist(o, cfg, params);
    } else if (command == "measure") {
      result = cmd_measure(o, cfg, params, csv);
    } else if (command == "bertrand") {
      result = cmd_bertrand(o, cfg, params);
    } else if (command == "dimension") {
      result = cmd_dimension(o, cfg, params, csv);
    } else if (command == "sample") {
      result = cmd_sample(o, cfg, params, csv);
    } else {
      result = cmd_plot(o, cfg, params);
    }

    if (!csv.empty()) {
      emit(o.common, csv);
      return kExitOk;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const json envelope = {
        {"command", command}, {"params", params}, {"result", result}, {"elapsed_ms", elapsed}};
    const std::string text = envelope.dump(2) + "\n";
    if (command == "plot") {
      std::cout << text;
    } else {
      emit(o.common, text);
    }
    return kExitOk;
  } catch (const cs::ChordspaceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
