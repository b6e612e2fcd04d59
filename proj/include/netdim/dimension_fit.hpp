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

#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "netdim/box_cover.hpp"

namespace netdim {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;  // 1 when the y values are constant
};

// Ordinary least squares y = slope * x + intercept. Throws FitError for fewer
// than two points or when all x coincide.
LineFit fit_slope(std::span<const std::pair<double, double>> points);

enum class FitMode { kSlope, kPointwise };

std::string_view to_string(FitMode mode);
// Accepts "slope" and "pointwise"; throws ArgumentError otherwise.
FitMode parse_fit_mode(std::string_view text);

// Inclusive range of box sizes used in a fit.
struct BoxRange {
  int min = 1;
  int max = 1;
};

// One row of the profile table for a given q.
struct ProfilePoint {
  int box_size = 1;
  double ln_l = 0.0;
  std::size_t n_boxes = 0;
  double entropy = 0.0;
  std::optional<double> pointwise_ratio;  // entropy / ln_l, absent at l = 1
};

struct DimensionEstimate {
  std::optional<double> q;  // absent for the box-counting dimension
  double dimension = 0.0;
  std::optional<double> slope;
  std::optional<double> intercept;
  std::optional<double> r_squared;  // slope mode with >= 3 points only
  BoxRange fit_range;
  FitMode mode = FitMode::kSlope;
  std::vector<std::pair<int, double>> pointwise_values;
};

// Rows (l, ln l, N_B, S_q(l), S_q(l)/ln l) for every covering in the profile.
std::vector<ProfilePoint> profile_points(const CoveringProfile& profile,
                                         double q);

// Negative slope of ln N_B against ln l_B.
DimensionEstimate box_counting_dimension(
    const CoveringProfile& profile, std::optional<BoxRange> range = {});

// Slope mode: negative slope of S_q against ln l over the range (default:
// the whole profile). Pointwise mode: mean of S_q(l) / ln l over the range
// (default: every l >= 2 in the profile); a range containing l = 1 throws
// DomainError since ln 1 = 0.
DimensionEstimate tsallis_dimension(const CoveringProfile& profile, double q,
                                    FitMode mode = FitMode::kSlope,
                                    std::optional<BoxRange> range = {});

// tsallis_dimension at q = 1 in slope mode.
DimensionEstimate information_dimension(const CoveringProfile& profile,
                                        std::optional<BoxRange> range = {});

// One estimate per q over the same profile, in q_list order. Throws
// ArgumentError for an empty list.
std::vector<DimensionEstimate> q_sweep(const CoveringProfile& profile,
                                       std::span<const double> q_list,
                                       FitMode mode = FitMode::kSlope,
                                       std::optional<BoxRange> range = {});

}  // namespace netdim
