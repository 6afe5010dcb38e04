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

#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace chordspace::figures {

namespace {

constexpr double kSize = 400.0;
constexpr double kCentre = kSize / 2.0;
constexpr double kPixelRadius = 170.0;

struct Canvas {
  std::ostringstream body;
  double scale = 1.0;

  explicit Canvas(const CircleConfig& cfg) : scale(kPixelRadius / cfg.radius()) {
    body << std::fixed << std::setprecision(3);
  }

  [[nodiscard]] double px(double x) const { return kCentre + scale * x; }
  [[nodiscard]] double py(double y) const { return kCentre - scale * y; }

  void circle() {
    body << "<circle cx=\"" << kCentre << "\" cy=\"" << kCentre << "\" r=\"" << kPixelRadius
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  void segment(Point2D p, Point2D q, const char* colour, double width, const char* extra = "") {
    body << "<line x1=\"" << px(p.x) << "\" y1=\"" << py(p.y) << "\" x2=\"" << px(q.x) << "\" y2=\"" << py(q.y)
         << "\" stroke=\"" << colour << "\" stroke-width=\"" << width << "\"" << extra << "/>\n";
  }

  void arc(const Arc& a, const CircleConfig& cfg, const char* colour) {
    const Point2D from = point_on_circle(a.start(), cfg);
    const Point2D to = point_on_circle(a.end(), cfg);
    const int large = a.angular_length() > std::numbers::pi ? 1 : 0;
    // Counterclockwise in the plane is sweep-flag 0 once y is flipped.
    body << "<path d=\"M " << px(from.x) << ' ' << py(from.y) << " A " << kPixelRadius << ' ' << kPixelRadius
         << " 0 " << large << " 0 " << px(to.x) << ' ' << py(to.y) << "\" fill=\"none\" stroke=\"" << colour
         << "\" stroke-width=\"5\" stroke-opacity=\"0.6\"/>\n";
  }

  void dot(Point2D p, const char* label) {
    body << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n";
    const double norm = std::max(std::hypot(p.x, p.y), std::numeric_limits<double>::min());
    body << "<text x=\"" << px(p.x) + 14.0 * p.x / norm - 4.0 << "\" y=\"" << py(p.y) - 14.0 * p.y / norm + 4.0
         << "\" font-family=\"serif\" font-size=\"13\">" << label << "</text>\n";
  }

  [[nodiscard]] std::string finish(const std::string& title) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

void draw_tube(Canvas& canvas, const Tube& tube, const CircleConfig& cfg) {
  canvas.arc(tube.arc1(), cfg, "#1f77b4");
  canvas.arc(tube.arc2(), cfg, "#1f77b4");
  const Point2D a = point_on_circle(tube.arc1().start(), cfg);
  const Point2D c = point_on_circle(tube.arc1().end(), cfg);
  const Point2D d = point_on_circle(tube.arc2().start(), cfg);
  const Point2D b = point_on_circle(tube.arc2().end(), cfg);
  canvas.segment(c, d, "#7f7f7f", 1.2);
  canvas.segment(b, a, "#7f7f7f", 1.2);
  canvas.dot(a, "A");
  canvas.dot(b, "B");
  canvas.dot(c, "C");
  canvas.dot(d, "D");
}

}  // namespace

std::string ball_svg(const Ball& ball, const CircleConfig& cfg) {
  Canvas canvas(cfg);
  canvas.circle();
  const Tube tube = ball_to_tube(ball, cfg);
  draw_tube(canvas, tube, cfg);
  const auto [p, q] = endpoints(ball.center(), cfg);
  canvas.segment(p, q, "black", 2.0);
  std::ostringstream title;
  title << "ball of radius " << ball.radius() << " around chord (" << ball.center().a().value() << ", "
        << ball.center().b().value() << ")";
  return canvas.finish(title.str());
}

std::string tube_svg(const Tube& tube, const CircleConfig& cfg) {
  Canvas canvas(cfg);
  canvas.circle();
  draw_tube(canvas, tube, cfg);
  const Chord centre(tube.arc1().midpoint(), tube.arc2().midpoint());
  const auto [p, q] = endpoints(centre, cfg);
  canvas.segment(p, q, "black", 2.0, " stroke-dasharray=\"6 3\"");
  return canvas.finish("tube");
}

std::string samples_svg(std::span<const Chord> chords, const CircleConfig& cfg) {
  Canvas canvas(cfg);
  canvas.circle();
  std::size_t bertrand = 0;
  for (const Chord& c : chords) {
    const auto [p, q] = endpoints(c, cfg);
    if (is_bertrand(c)) {
      ++bertrand;
      canvas.segment(p, q, "#d62728", 0.8, " stroke-opacity=\"0.7\" class=\"bertrand\"");
    } else {
      canvas.segment(p, q, "#7f7f7f", 0.5, " stroke-opacity=\"0.5\" class=\"short\"");
    }
  }
  std::ostringstream title;
  title << chords.size() << " chords, " << bertrand << " longer than the triangle side";
  return canvas.finish(title.str());
}

std::string convergence_svg(const MeasureReport& report) {
  constexpr double left = 60.0;
  constexpr double right = kSize - 20.0;
  constexpr double top = 30.0;
  constexpr double bottom = kSize - 50.0;

  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = report.exact_value;
  double ymax = report.exact_value;
  for (const auto& e : report.estimates) {
    const double x = std::log10(static_cast<double>(e.n_subdivisions));
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min({ymin, e.lower_bound, e.upper_bound});
    ymax = std::max({ymax, e.lower_bound, e.upper_bound});
  }
  if (report.estimates.empty()) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (xmax <= xmin) {
    xmax = xmin + 1.0;
  }
  const double pad = 0.05 * std::max(ymax - ymin, 1e-12 * std::abs(report.exact_value) + 1e-300);
  ymin -= pad;
  ymax += pad;
  auto sx = [&](double x) { return left + (right - left) * (x - xmin) / (xmax - xmin); };
  auto sy = [&](double y) { return bottom - (bottom - top) * (y - ymin) / (ymax - ymin); };

  std::ostringstream body;
  body << std::setprecision(6);
  body << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom
       << "\" stroke=\"black\"/>\n";
  body << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << bottom
       << "\" stroke=\"black\"/>\n";
  body << "<line x1=\"" << left << "\" y1=\"" << sy(report.exact_value) << "\" x2=\"" << right << "\" y2=\""
       << sy(report.exact_value) << "\" stroke=\"black\" stroke-dasharray=\"4 4\" class=\"exact\"/>\n";
  auto polyline = [&](auto value, const char* colour, const char* cls) {
    body << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" class=\"" << cls
         << "\" points=\"";
    for (const auto& e : report.estimates) {
      body << sx(std::log10(static_cast<double>(e.n_subdivisions))) << ',' << sy(value(e)) << ' ';
    }
    body << "\"/>\n";
  };
  polyline([](const CoveringEstimate& e) { return e.upper_bound; }, "#d62728", "upper");
  polyline([](const CoveringEstimate& e) { return e.lower_bound; }, "#1f77b4", "lower");
  body << "<text x=\"" << left << "\" y=\"" << kSize - 15.0
       << "\" font-family=\"sans-serif\" font-size=\"12\">log10(subdivisions)</text>\n";
  body << "<text x=\"" << left + 5.0 << "\" y=\"" << top - 10.0
       << "\" font-family=\"sans-serif\" font-size=\"12\">exact " << report.exact_value << "</text>\n";

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "<title>covering bounds for " << to_string(report.set) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace chordspace::figures
