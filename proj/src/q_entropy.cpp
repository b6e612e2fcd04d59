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

#include "netdim/q_entropy.hpp"

#include <cmath>
#include <string>

#include "netdim/errors.hpp"

namespace netdim {

namespace {

// Below this |q - 1| the expm1 form is used.
constexpr double kNearShannon = 0.5;

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw ConsistencyError("probability vector is empty");
  double total = 0.0;
  for (double v : p_) {
    if (!(v > 0.0)) {
      throw ConsistencyError("probabilities must be positive, got " +
                             std::to_string(v));
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ConsistencyError("probabilities sum to " + std::to_string(total));
  }
}

ProbabilityVector box_probabilities(const BoxCovering& covering,
                                    std::size_t n) {
  std::size_t total = 0;
  for (const auto& box : covering.boxes) total += box.size();
  if (total != n || n == 0) {
    throw ConsistencyError("boxes hold " + std::to_string(total) +
                           " nodes, expected " + std::to_string(n));
  }
  std::vector<double> p;
  p.reserve(covering.boxes.size());
  for (const auto& box : covering.boxes) {
    p.push_back(static_cast<double>(box.size()) / static_cast<double>(n));
  }
  return ProbabilityVector(std::move(p));
}

double q_log(double x, double q) {
  if (!(x > 0.0)) {
    throw DomainError("q_log needs x > 0, got " + std::to_string(x));
  }
  const double ln_x = std::log(x);
  if (std::abs(q - 1.0) < kShannonThreshold) return ln_x;
  const double a = 1.0 - q;
  return std::expm1(a * ln_x) / a;
}

EntropyValue shannon_entropy(const ProbabilityVector& p) {
  double s = 0.0;
  for (double v : p.values()) s -= v * std::log(v);
  return {1.0, s};
}

EntropyValue tsallis_entropy(const ProbabilityVector& p, double q) {
  if (std::abs(q - 1.0) < kShannonThreshold) {
    return {q, shannon_entropy(p).value};
  }
  const double a = q - 1.0;
  double s = 0.0;
  if (std::abs(a) < kNearShannon) {
    for (double v : p.values()) s -= v * std::expm1(a * std::log(v));
  } else {
    double sum = 0.0;
    for (double v : p.values()) sum += std::exp(q * std::log(v));
    s = 1.0 - sum;
  }
  return {q, s / a};
}

double information_volume(const ProbabilityVector& p, double q) {
  return tsallis_entropy(p, q).value;
}

}  // namespace netdim
