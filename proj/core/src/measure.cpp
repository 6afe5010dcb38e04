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

#include "chordspace/measure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

namespace chordspace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

/// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct RowTally {
  std::int64_t off_diagonal = 0;
  std::int64_t diagonal = 0;
  double measure = 0.0;
};

class CellProber {
 public:
  CellProber(const ChordPredicate& predicate, const ArcGrid& grid, const ProbeStencil& stencil)
      : predicate_(predicate), grid_(grid) {
    const int k = std::max(1, stencil.per_axis);
    for (int q = 0; q < k; ++q) {
      lattice_.push_back((q + 0.5) / k);
    }
    for (int q = 0; q < k + 2; ++q) {
      diagonal_lattice_.push_back((q + 0.5) / (k + 2));
    }
    inset_ = stencil.corner_inset;
  }

  [[nodiscard]] bool off_diagonal_hit(std::int64_t i, std::int64_t j) const {
    for (double fu : lattice_) {
      for (double fv : lattice_) {
        if (probe(i, fu, j, fv)) {
          return true;
        }
      }
    }
    const double lo = inset_;
    const double hi = 1.0 - inset_;
    return probe(i, lo, j, lo) || probe(i, lo, j, hi) || probe(i, hi, j, lo) || probe(i, hi, j, hi);
  }

  [[nodiscard]] bool diagonal_hit(std::int64_t i) const {
    for (std::size_t p = 0; p < diagonal_lattice_.size(); ++p) {
      for (std::size_t q = p + 1; q < diagonal_lattice_.size(); ++q) {
        if (probe(i, diagonal_lattice_[p], i, diagonal_lattice_[q])) {
          return true;
        }
      }
    }
    return probe(i, inset_, i, 1.0 - inset_);
  }

 private:
  [[nodiscard]] bool probe(std::int64_t i, double fu, std::int64_t j, double fv) const {
    const double u = grid_.lower(i) + fu * grid_.width(i);
    const double v = grid_.lower(j) + fv * grid_.width(j);
    if (Angle(u) == Angle(v)) {
      return false;
    }
    return predicate_(Chord(u, v));
  }

  const ChordPredicate& predicate_;
  const ArcGrid& grid_;
  std::vector<double> lattice_;
  std::vector<double> diagonal_lattice_;
  double inset_ = 1e-9;
};

}  // namespace

double tube_cover_upper(double gamma, std::int64_t n, double s, const CircleConfig& cfg) {
  if (n < 1 || !(gamma > 0.0) || !(s > 0.0)) {
    throw InvalidParameter("tube_cover_upper needs n >= 1, gamma > 0, s > 0");
  }
  const double r = cfg.radius();
  const double nn = static_cast<double>(n);
  const double piece = 2.0 * r * std::sin(gamma / (2.0 * r * nn));
  return nn * nn * std::pow(piece, s);
}

double tube_cover_lower(double gamma, double epsilon, const CircleConfig& cfg) {
  const double r = cfg.radius();
  if (!(epsilon > 0.0) || epsilon >= 2.0 * std::sqrt(3.0) * r) {
    throw InvalidParameter("tube_cover_lower needs 0 < epsilon < 2*sqrt(3)*R");
  }
  if (!(gamma > 0.0)) {
    throw InvalidParameter("tube_cover_lower needs gamma > 0");
  }
  return (1.0 - epsilon * epsilon / (12.0 * r * r)) * gamma * gamma;
}

double exact_measure(const ChordSetId& id, const CircleConfig& cfg) {
  validate(id, cfg);
  const double r = cfg.radius();
  const double full = 2.0 * std::numbers::pi * std::numbers::pi * r * r;
  return std::visit(Overloaded{
                        [](const TubeSet& s) { return s.gamma * s.gamma; },
                        [](const ArcRectangle& s) { return s.gamma1 * s.gamma2; },
                        [](const SameArc& s) { return 0.5 * s.gamma * s.gamma; },
                        [&](const FullSpace&) { return full; },
                        [&](const BertrandSet&) { return full / 3.0; },
                    },
                    id);
}

double same_arc_partial_sum(double gamma, int m) {
  if (m < 1) {
    throw InvalidParameter("same_arc_partial_sum needs m >= 1");
  }
  return 0.5 * gamma * gamma * (1.0 - std::ldexp(1.0, -m));
}

double full_space_additivity(std::int64_t n, const CircleConfig& cfg) {
  if (n < 1) {
    throw InvalidParameter("full_space_additivity needs n >= 1");
  }
  const double nn = static_cast<double>(n);
  const double cell = cfg.circumference() / nn;
  return nn * cell * cell / 2.0 + nn * (nn - 1.0) / 2.0 * cell * cell;
}

std::int64_t bertrand_partners_per_arc(std::int64_t n) {
  if (n < 6) {
    throw InvalidParameter("the Bertrand inner cover needs n >= 6 arcs");
  }
  return floor_div(2 * n, 3) - ceil_div(n, 3) - 1;
}

double bertrand_closed_form_count(std::int64_t n) {
  const double nn = static_cast<double>(n);
  return nn * (nn - 2.0 - 2.0 * static_cast<double>(n / 3)) / 2.0;
}

InnerCover bertrand_inner_cover(std::int64_t n, const CircleConfig& cfg) {
  if (n < 6) {
    throw InvalidParameter("the Bertrand inner cover needs n >= 6 arcs");
  }
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      const std::int64_t t = j - i;
      if (3 * (t - 1) >= n && 3 * (t + 1) <= 2 * n) {
        ++count;
      }
    }
  }
  const double cell = cfg.circumference() / static_cast<double>(n);
  return {count, static_cast<double>(count) * cell * cell};
}

ArcGrid ArcGrid::uniform(std::int64_t n) {
  if (n < 1) {
    throw InvalidParameter("grid needs at least one arc");
  }
  std::vector<double> bounds(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) {
    bounds[static_cast<std::size_t>(i)] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
  }
  return ArcGrid(std::move(bounds));
}

ArcGrid ArcGrid::with_cell_length(double arc_length, const CircleConfig& cfg) {
  if (!(arc_length > 0.0)) {
    throw InvalidParameter("grid cell length must be positive");
  }
  const double step = arc_length / cfg.radius();
  if (step >= kTwoPi) {
    throw InvalidParameter("grid cell length must be below the circumference");
  }
  std::vector<double> bounds{0.0};
  for (std::int64_t i = 1;; ++i) {
    const double b = step * static_cast<double>(i);
    // Drop a remainder sliver rather than create a near-empty cell.
    if (b >= kTwoPi - 1e-9 * step) {
      break;
    }
    bounds.push_back(b);
  }
  bounds.push_back(kTwoPi);
  return ArcGrid(std::move(bounds));
}

GridCover grid_cover_count(const ChordPredicate& predicate, const ArcGrid& grid, const CircleConfig& cfg,
                           const ProbeStencil& stencil, unsigned jobs) {
  const std::int64_t n = grid.size();
  const double r = cfg.radius();
  const CellProber prober(predicate, grid, stencil);
  std::vector<RowTally> rows(static_cast<std::size_t>(n));

  auto work = [&](unsigned worker, unsigned workers) {
    for (std::int64_t i = worker; i < n; i += workers) {
      RowTally tally;
      CompensatedSum measure;
      const double li = r * grid.width(i);
      if (prober.diagonal_hit(i)) {
        ++tally.diagonal;
        measure.add(0.5 * li * li);
      }
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (prober.off_diagonal_hit(i, j)) {
          ++tally.off_diagonal;
          measure.add(li * r * grid.width(j));
        }
      }
      tally.measure = measure.value();
      rows[static_cast<std::size_t>(i)] = tally;
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::int64_t>(n, 1))));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, workers);
    }
  }

  GridCover out;
  out.arcs = n;
  CompensatedSum measure;
  for (const RowTally& row : rows) {
    out.off_diagonal += row.off_diagonal;
    out.diagonal += row.diagonal;
    measure.add(row.measure);
  }
  out.cells = out.off_diagonal + out.diagonal;
  out.measure = measure.value();
  return out;
}

GridCover grid_cover_count(const ChordPredicate& predicate, std::int64_t n, const CircleConfig& cfg,
                           const ProbeStencil& stencil, unsigned jobs) {
  return grid_cover_count(predicate, ArcGrid::uniform(n), cfg, stencil, jobs);
}

DimensionEstimate dimension_estimate(const ChordPredicate& predicate, std::vector<double> epsilons,
                                     const CircleConfig& cfg, const DimensionOptions& options) {
  std::sort(epsilons.begin(), epsilons.end(), std::greater<>());
  epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
  if (epsilons.size() < 4) {
    throw InvalidParameter("dimension_estimate needs at least four distinct epsilon values");
  }
  if (!(epsilons.back() > 0.0)) {
    throw InvalidParameter("epsilon values must be positive");
  }
  if (epsilons.front() / epsilons.back() < options.min_span) {
    throw InvalidParameter("epsilon values must span a factor of at least " + std::to_string(options.min_span));
  }

  DimensionEstimate out;
  out.epsilons = epsilons;
  for (double eps : epsilons) {
    const GridCover cover =
        grid_cover_count(predicate, ArcGrid::with_cell_length(eps, cfg), cfg, options.stencil, options.jobs);
    if (cover.cells == 0) {
      throw DegenerateFit("no grid cell met the set at epsilon " + std::to_string(eps));
    }
    out.counts.push_back(cover.cells);
  }
  if (std::all_of(out.counts.begin(), out.counts.end(), [&](std::int64_t c) { return c == out.counts.front(); })) {
    throw DegenerateFit("covering counts do not change with epsilon");
  }

  const auto m = static_cast<double>(epsilons.size());
  double mx = 0.0;
  double my = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    xs.push_back(-std::log(epsilons[i]));
    ys.push_back(std::log(static_cast<double>(out.counts[i])));
    mx += xs.back();
    my += ys.back();
  }
  mx /= m;
  my /= m;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  out.s_estimate = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = my + out.s_estimate * (xs[i] - mx);
    ss += (ys[i] - fit) * (ys[i] - fit);
  }
  out.fit_residual = std::sqrt(ss / m);
  return out;
}

namespace {

std::vector<std::int64_t> doubling_ladder(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> ns;
  for (std::int64_t n = first; n < last; n *= 2) {
    ns.push_back(n);
  }
  ns.push_back(last);
  return ns;
}

}  // namespace

MeasureReport measure_report(const ChordSetId& id, const CircleConfig& cfg, const MeasureOptions& options) {
  MeasureReport report;
  report.set = id;
  report.exact_value = exact_measure(id, cfg);
  if (options.method == MeasureMethod::Exact) {
    report.converged = true;
    return report;
  }
  if (options.max_subdivisions < 1) {
    throw InvalidParameter("covering ladder needs at least one subdivision");
  }

  const double r = cfg.radius();
  const std::int64_t top = options.max_subdivisions;
  auto& est = report.estimates;
  std::visit(
      Overloaded{
          [&](const TubeSet& s) {
            for (std::int64_t n : doubling_ladder(1, top)) {
              const double eps = s.gamma / static_cast<double>(n);
              est.push_back({eps, 2.0, n, tube_cover_upper(s.gamma, n, 2.0, cfg), tube_cover_lower(s.gamma, eps, cfg)});
            }
          },
          [&](const ArcRectangle& s) {
            for (std::int64_t n : doubling_ladder(1, top)) {
              const double eps = std::max(s.gamma1, s.gamma2) / static_cast<double>(n);
              const double k1 = std::ceil(s.gamma1 / eps - 1e-9);
              const double k2 = std::ceil(s.gamma2 / eps - 1e-9);
              const double d = 2.0 * r * std::sin(eps / (2.0 * r));
              est.push_back({eps, 2.0, n, k1 * k2 * d * d,
                             (1.0 - eps * eps / (12.0 * r * r)) * s.gamma1 * s.gamma2});
            }
          },
          [&](const SameArc& s) {
            for (int m = 1; (std::int64_t{1} << m) <= std::max<std::int64_t>(top, 2) && m < 62; ++m) {
              const auto cells = std::int64_t{1} << m;
              const double eps = s.gamma / static_cast<double>(cells);
              const double lower = same_arc_partial_sum(s.gamma, m);
              const double leftover = 2.0 * r * std::sin(eps / (2.0 * r));
              est.push_back({eps, 2.0, cells, lower + static_cast<double>(cells) * leftover * leftover, lower});
            }
          },
          [&](const FullSpace&) {
            for (std::int64_t n : doubling_ladder(1, top)) {
              const double value = full_space_additivity(n, cfg);
              est.push_back({cfg.circumference() / static_cast<double>(n), 2.0, n, value, value});
            }
          },
          [&](const BertrandSet&) {
            const ChordPredicate pred = membership(BertrandSet{}, cfg);
            for (std::int64_t n : doubling_ladder(6, std::max<std::int64_t>(top, 6))) {
              const InnerCover inner = bertrand_inner_cover(n, cfg);
              const GridCover outer = grid_cover_count(pred, n, cfg, {}, options.jobs);
              est.push_back({cfg.circumference() / static_cast<double>(n), 2.0, n, outer.measure, inner.measure});
            }
          },
      },
      id);

  report.converged = std::abs(est.back().upper_bound - report.exact_value) / report.exact_value < options.tolerance;
  return report;
}

}  // namespace chordspace
