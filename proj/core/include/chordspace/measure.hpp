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
 * @file   measure.hpp
 * @brief  Two-dimensional Hausdorff measure of chord sets.
 *
 * Outer measure by coverings of diameter at most ε (method I), its limit as
 * ε → 0 (method II), closed-form values for tubes, arc rectangles, same-arc
 * sets, the whole space and the Bertrand set, and a box-counting estimate of
 * the Hausdorff dimension.
 *
 * Coverings are always built from grid tubes: the circle is cut into arcs
 * and every cell of the grid is the set of chords joining two of those arcs
 * (or, on the diagonal, the chords with both ends on one arc).
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "chordspace/chord_sets.hpp"
#include "chordspace/geometry.hpp"

namespace chordspace {

/// One evaluation of the method-I outer measure at a covering scale.
struct CoveringEstimate {
  double epsilon = 0.0;
  double s = 2.0;
  std::int64_t n_subdivisions = 0;
  double upper_bound = 0.0;
  double lower_bound = 0.0;
};

struct MeasureReport {
  ChordSetId set;
  double exact_value = 0.0;
  /// Ordered by decreasing epsilon.
  std::vector<CoveringEstimate> estimates;
  bool converged = false;
};

struct DimensionEstimate {
  double s_estimate = 0.0;
  /// Decreasing.
  std::vector<double> epsilons;
  std::vector<std::int64_t> counts;
  /// Root-mean-square residual of the log-log fit.
  double fit_residual = 0.0;
};

/// n²·(2R·sin(γ/(2Rn)))^s: the covering sum of the n×n grid of sub-tubes of
/// a tube over arcs of length γ.
[[nodiscard]] double tube_cover_upper(double gamma, std::int64_t n, double s, const CircleConfig& cfg);

/// (1 − ε²/12R²)·γ², the lower bound on the ε-covering sum (s = 2) of a tube
/// over arcs of length γ. Here ε caps the arc length of covering tubes.
/// Throws InvalidParameter unless 0 < ε < 2√3·R.
[[nodiscard]] double tube_cover_lower(double gamma, double epsilon, const CircleConfig& cfg);

/// Closed-form H² of the set: γ², γ1·γ2, γ²/2, 2π²R², 2π²R²/3.
/// Throws InvalidParameter when the set does not fit on the circle.
[[nodiscard]] double exact_measure(const ChordSetId& id, const CircleConfig& cfg);

/// Σ_{k=1..m} 2^{k−1}·γ²/4^k, the measure of the first m levels of the dyadic
/// decomposition of a same-arc set into degenerate tubes.
[[nodiscard]] double same_arc_partial_sum(double gamma, int m);

/// n·(2πR/n)²/2 + n(n−1)/2·(2πR/n)²: diagonal same-arc cells plus
/// off-diagonal tubes of the n-arc partition.
[[nodiscard]] double full_space_additivity(std::int64_t n, const CircleConfig& cfg);

struct InnerCover {
  std::int64_t tube_count = 0;
  double measure = 0.0;
};

/// Inner approximation of the Bertrand set by grid tubes.
///
/// Cuts the circle into n equal arcs and keeps every unordered pair of
/// distinct arcs whose open tube lies inside the Bertrand set, i.e. every
/// chord from the interior of one arc to the interior of the other has
/// central angle above 2π/3. The test is exact integer arithmetic on the
/// index offset t between the arcs: 3(t−1) ≥ n and 3(t+1) ≤ 2n.
///
/// Throws InvalidParameter for n < 6.
[[nodiscard]] InnerCover bertrand_inner_cover(std::int64_t n, const CircleConfig& cfg);

/// Partners kept per arc by bertrand_inner_cover: ⌊2n/3⌋ − ⌈n/3⌉ − 1.
[[nodiscard]] std::int64_t bertrand_partners_per_arc(std::int64_t n);

/// n·(n − 2 − 2⌊n/3⌋)/2, a closed form for the inner-approximation tube
/// count. Not an integer for odd n and one partner per arc away from the
/// enumerated count; kept for comparison only.
[[nodiscard]] double bertrand_closed_form_count(std::int64_t n);

/// Partition of the circle into consecutive arcs, stored as increasing
/// boundary angles from 0 to 2π.
class ArcGrid {
 public:
  /// n equal arcs.
  [[nodiscard]] static ArcGrid uniform(std::int64_t n);
  /// Arcs of the given length starting at angle 0; the last arc takes the
  /// remainder of the circle.
  [[nodiscard]] static ArcGrid with_cell_length(double arc_length, const CircleConfig& cfg);

  [[nodiscard]] std::int64_t size() const noexcept { return static_cast<std::int64_t>(bounds_.size()) - 1; }
  [[nodiscard]] double lower(std::int64_t i) const { return bounds_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] double upper(std::int64_t i) const { return bounds_[static_cast<std::size_t>(i) + 1]; }
  [[nodiscard]] double width(std::int64_t i) const { return upper(i) - lower(i); }

 private:
  explicit ArcGrid(std::vector<double> bounds) : bounds_(std::move(bounds)) {}
  std::vector<double> bounds_;
};

/// Probe points used to decide whether a grid cell meets a chord set.
struct ProbeStencil {
  /// Interior lattice points per axis of an off-diagonal cell, placed at
  /// fractions (q + ½)/k. Diagonal cells use all ordered pairs of a
  /// (k + 2)-point lattice. k = 3 gives 9 and 10 points.
  int per_axis = 3;
  /// Cell corners are probed after moving them this fraction of the cell
  /// width into the cell, so a set that only touches a cell along its
  /// boundary is not counted.
  double corner_inset = 1e-9;
};

struct GridCover {
  std::int64_t arcs = 0;
  /// Cells meeting the set: off_diagonal + diagonal.
  std::int64_t cells = 0;
  std::int64_t off_diagonal = 0;
  std::int64_t diagonal = 0;
  /// Σ cell measures of the counted cells (L_i·L_j off the diagonal, L_i²/2
  /// on it), an outer estimate of H².
  double measure = 0.0;
};

/// Counts grid cells that meet the set described by the predicate. Cells are
/// evaluated independently; `jobs` threads split the rows and the result does
/// not depend on it.
[[nodiscard]] GridCover grid_cover_count(const ChordPredicate& predicate, const ArcGrid& grid,
                                         const CircleConfig& cfg, const ProbeStencil& stencil = {},
                                         unsigned jobs = 1);
[[nodiscard]] GridCover grid_cover_count(const ChordPredicate& predicate, std::int64_t n, const CircleConfig& cfg,
                                         const ProbeStencil& stencil = {}, unsigned jobs = 1);

struct DimensionOptions {
  ProbeStencil stencil{};
  unsigned jobs = 1;
  /// Smallest allowed max(ε)/min(ε).
  double min_span = 8.0;
};

/// Box-counting dimension: least-squares slope of log N(ε) against log(1/ε),
/// with N(ε) the number of cells met in a grid of arcs of length ε.
///
/// Needs at least four distinct ε values spanning a factor of
/// options.min_span; throws InvalidParameter otherwise. Throws DegenerateFit
/// when a count is zero or all counts are equal.
[[nodiscard]] DimensionEstimate dimension_estimate(const ChordPredicate& predicate, std::vector<double> epsilons,
                                                   const CircleConfig& cfg, const DimensionOptions& options = {});

enum class MeasureMethod { Exact, Cover };

struct MeasureOptions {
  MeasureMethod method = MeasureMethod::Exact;
  /// Finest subdivision of the covering ladder.
  std::int64_t max_subdivisions = 256;
  /// Relative error below which a covering ladder counts as converged.
  double tolerance = 1e-2;
  unsigned jobs = 1;
};

/// Exact value and, for MeasureMethod::Cover, a ladder of covering estimates
/// with subdivisions doubling up to options.max_subdivisions.
///
/// Per set: tubes and arc rectangles use the grid sum (upper) and the
/// square-packing bound (lower); same-arc sets use the dyadic partial sum
/// (lower) plus the leftover cells' squared diameters (upper); the whole
/// space uses the additivity identity; the Bertrand set uses the inner tube
/// cover (lower) and the probed outer grid measure (upper).
[[nodiscard]] MeasureReport measure_report(const ChordSetId& id, const CircleConfig& cfg,
                                           const MeasureOptions& options = {});

}  // namespace chordspace
