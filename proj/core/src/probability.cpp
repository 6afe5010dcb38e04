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

#include "chordspace/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "chordspace/measure.hpp"

namespace chordspace {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

std::string_view to_string(SamplerKind kind) noexcept {
  switch (kind) {
    case SamplerKind::H2Uniform:
      return "h2";
    case SamplerKind::RandomEndpoints:
      return "endpoints";
    case SamplerKind::RandomRadius:
      return "radius";
    case SamplerKind::RandomMidpoint:
      return "midpoint";
  }
  return "unknown";
}

std::optional<SamplerKind> parse_sampler_kind(std::string_view name) noexcept {
  for (SamplerKind k :
       {SamplerKind::H2Uniform, SamplerKind::RandomEndpoints, SamplerKind::RandomRadius, SamplerKind::RandomMidpoint}) {
    if (to_string(k) == name) {
      return k;
    }
  }
  return std::nullopt;
}

double probability(const ChordSetId& id, const CircleConfig& cfg) {
  return exact_measure(id, cfg) / exact_measure(FullSpace{}, cfg);
}

Chord sample_chord(SamplerKind kind, RandomStream& rng) {
  while (true) {
    double a = 0.0;
    double b = 0.0;
    switch (kind) {
      case SamplerKind::H2Uniform: {
        // Triangle {0 ≤ x < y < 2π}: x from its marginal density
        // 2(2π − x)/(2π)², then y uniform on (x, 2π).
        const double u = rng.uniform01();
        const double v = rng.uniform01();
        a = kTwoPi * (1.0 - std::sqrt(1.0 - u));
        b = a + (kTwoPi - a) * v;
        break;
      }
      case SamplerKind::RandomEndpoints:
        a = kTwoPi * rng.uniform01();
        b = kTwoPi * rng.uniform01();
        break;
      case SamplerKind::RandomRadius: {
        const double direction = kTwoPi * rng.uniform01();
        const double offset = 2.0 * rng.uniform01() - 1.0;
        if (offset <= -1.0) {
          continue;
        }
        const double half = std::acos(offset);
        a = direction - half;
        b = direction + half;
        break;
      }
      case SamplerKind::RandomMidpoint: {
        const double x = 2.0 * rng.uniform01() - 1.0;
        const double y = 2.0 * rng.uniform01() - 1.0;
        const double r2 = x * x + y * y;
        if (r2 >= 1.0 || r2 == 0.0) {
          continue;
        }
        const double direction = std::atan2(y, x);
        const double half = std::acos(std::sqrt(r2));
        a = direction - half;
        b = direction + half;
        break;
      }
    }
    if (Angle(a) != Angle(b)) {
      return Chord(a, b);
    }
  }
}

ParamPoint chord_to_param(const Chord& c, const CircleConfig& cfg) noexcept {
  return {cfg.radius() * c.a().value(), cfg.radius() * c.b().value()};
}

Chord param_to_chord(ParamPoint p, const CircleConfig& cfg) {
  if (!(p.x >= 0.0 && p.x < p.y && p.y < cfg.circumference())) {
    throw InvalidParameter("parameter point must satisfy 0 <= x < y < 2*pi*R");
  }
  return Chord(p.x / cfg.radius(), p.y / cfg.radius());
}

std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t n) {
  if (n == 0 || hits > n) {
    throw InvalidParameter("wilson_interval needs 0 <= hits <= n and n > 0");
  }
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = kZ95 / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  double lo = std::clamp(center - half, 0.0, 1.0);
  double hi = std::clamp(center + half, 0.0, 1.0);
  if (hits == 0) {
    lo = 0.0;
  }
  if (hits == n) {
    hi = 1.0;
  }
  return {lo, hi};
}

SampleBatch mc_probability(SamplerKind kind, const ChordPredicate& event, std::uint64_t n, std::uint64_t seed,
                           const McOptions& options) {
  if (n == 0) {
    throw InvalidParameter("mc_probability needs at least one sample");
  }
  const std::uint64_t streams = (n + kSamplesPerStream - 1) / kSamplesPerStream;
  std::vector<std::uint64_t> hits_per_stream(streams, 0);

  auto work = [&](std::uint64_t worker, std::uint64_t workers) {
    for (std::uint64_t s = worker; s < streams; s += workers) {
      RandomStream rng(seed, s);
      const std::uint64_t first = s * kSamplesPerStream;
      const std::uint64_t count = std::min(kSamplesPerStream, n - first);
      std::uint64_t hits = 0;
      for (std::uint64_t i = 0; i < count; ++i) {
        if (event(sample_chord(kind, rng))) {
          ++hits;
        }
      }
      hits_per_stream[s] = hits;
    }
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(options.jobs, 1, streams);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, workers);
    }
  }

  SampleBatch batch;
  batch.kind = kind;
  batch.seed = seed;
  batch.n = n;
  for (std::uint64_t h : hits_per_stream) {
    batch.hits += h;
  }
  batch.p_hat = static_cast<double>(batch.hits) / static_cast<double>(n);
  batch.ci95 = wilson_interval(batch.hits, n);
  return batch;
}

SampleBatch empirical_tube_probability(const Tube& t, std::uint64_t n, std::uint64_t seed,
                                       const McOptions& options) {
  return mc_probability(
      SamplerKind::H2Uniform, [&t](const Chord& c) { return tube_contains(t, c); }, n, seed, options);
}

}  // namespace chordspace
