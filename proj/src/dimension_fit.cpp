// Copyright 2026 The netdim Authors
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

#include "netdim/dimension_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netdim/errors.hpp"
#include "netdim/parallel.hpp"
#include "netdim/q_entropy.hpp"

namespace netdim {

LineFit fit_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw FitError("need at least 2 points to fit a line, got " +
                   std::to_string(points.size()));
  }
  const auto n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = x - mean_x;
    const double dy = y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const bool same_x =
      std::all_of(points.begin(), points.end(),
                  [&](const auto& p) { return p.first == points[0].first; });
  if (same_x || sxx == 0.0) throw FitError("x values are all equal");

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (const auto& [x, y] : points) {
      const double r = y - (fit.slope * x + fit.intercept);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

std::string_view to_string(FitMode mode) {
  return mode == FitMode::kSlope ? "slope" : "pointwise";
}

FitMode parse_fit_mode(std::string_view text) {
  if (text == "slope") return FitMode::kSlope;
  if (text == "pointwise") return FitMode::kPointwise;
  throw ArgumentError("unknown mode '" + std::string(text) +
                      "' (expected slope or pointwise)");
}

std::vector<ProfilePoint> profile_points(const CoveringProfile& profile,
                                         double q) {
  std::vector<ProfilePoint> rows;
  rows.reserve(profile.coverings.size());
  for (const auto& covering : profile.coverings) {
    ProfilePoint row;
    row.box_size = covering.box_size;
    row.ln_l = std::log(static_cast<double>(covering.box_size));
    row.n_boxes = covering.box_count();
    row.entropy =
        tsallis_entropy(box_probabilities(covering, profile.node_count), q)
            .value;
    if (covering.box_size >= 2) row.pointwise_ratio = row.entropy / row.ln_l;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::vector<const BoxCovering*> select(const CoveringProfile& profile,
                                       const std::optional<BoxRange>& range) {
  if (range && range->min > range->max) {
    throw ArgumentError("empty box size range [" + std::to_string(range->min) +
                        ", " + std::to_string(range->max) + "]");
  }
  std::vector<const BoxCovering*> picked;
  for (const auto& c : profile.coverings) {
    if (!range || (c.box_size >= range->min && c.box_size <= range->max)) {
      picked.push_back(&c);
    }
  }
  return picked;
}

DimensionEstimate slope_estimate(
    std::span<const std::pair<double, double>> points, BoxRange used) {
  const LineFit fit = fit_slope(points);
  DimensionEstimate est;
  est.dimension = -fit.slope;
  est.slope = fit.slope;
  est.intercept = fit.intercept;
  if (points.size() >= 3) est.r_squared = fit.r_squared;
  est.fit_range = used;
  est.mode = FitMode::kSlope;
  return est;
}

BoxRange span_of(const std::vector<const BoxCovering*>& picked) {
  if (picked.empty()) return {};
  return {picked.front()->box_size, picked.back()->box_size};
}

}  // namespace

DimensionEstimate box_counting_dimension(const CoveringProfile& profile,
                                         std::optional<BoxRange> range) {
  const auto picked = select(profile, range);
  std::vector<std::pair<double, double>> points;
  for (const BoxCovering* c : picked) {
    points.emplace_back(std::log(static_cast<double>(c->box_size)),
                        std::log(static_cast<double>(c->box_count())));
  }
  return slope_estimate(points, span_of(picked));
}

DimensionEstimate tsallis_dimension(const CoveringProfile& profile, double q,
                                    FitMode mode,
                                    std::optional<BoxRange> range) {
  if (mode == FitMode::kPointwise) {
    if (range && range->min <= 1 && range->max >= 1) {
      throw DomainError(
          "pointwise dimension is undefined at l = 1 (ln 1 = 0); start the "
          "range at 2");
    }
    if (!range) range = BoxRange{2, std::numeric_limits<int>::max()};
  }
  const auto picked = select(profile, range);

  if (mode == FitMode::kSlope) {
    std::vector<std::pair<double, double>> points;
    for (const BoxCovering* c : picked) {
      const auto p = box_probabilities(*c, profile.node_count);
      points.emplace_back(std::log(static_cast<double>(c->box_size)),
                          tsallis_entropy(p, q).value);
    }
    DimensionEstimate est = slope_estimate(points, span_of(picked));
    est.q = q;
    return est;
  }

  if (picked.empty()) {
    throw FitError("no box sizes >= 2 in range for a pointwise dimension");
  }
  DimensionEstimate est;
  est.q = q;
  est.mode = FitMode::kPointwise;
  est.fit_range = span_of(picked);
  double total = 0.0;
  for (const BoxCovering* c : picked) {
    const auto p = box_probabilities(*c, profile.node_count);
    const double ratio = tsallis_entropy(p, q).value /
                         std::log(static_cast<double>(c->box_size));
    est.pointwise_values.emplace_back(c->box_size, ratio);
    total += ratio;
  }
  est.dimension = total / static_cast<double>(picked.size());
  return est;
}

DimensionEstimate information_dimension(const CoveringProfile& profile,
                                        std::optional<BoxRange> range) {
  return tsallis_dimension(profile, 1.0, FitMode::kSlope, range);
}

std::vector<DimensionEstimate> q_sweep(const CoveringProfile& profile,
                                       std::span<const double> q_list,
                                       FitMode mode,
                                       std::optional<BoxRange> range) {
  if (q_list.empty()) throw ArgumentError("q list is empty");
  std::vector<DimensionEstimate> out(q_list.size());
  parallel_for(q_list.size(), [&](std::size_t i) {
    out[i] = tsallis_dimension(profile, q_list[i], mode, range);
  });
  return out;
}

}  // namespace netdim
