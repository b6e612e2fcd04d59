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

#include <cstddef>
#include <span>
#include <vector>

#include "netdim/box_cover.hpp"

namespace netdim {

// |q - 1| below this is treated as q = 1 and evaluated as Shannon entropy.
inline constexpr double kShannonThreshold = 1e-9;

// Box occupation probabilities. Every entry is positive and they sum to one
// within 1e-12; the constructor throws ConsistencyError otherwise.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);

  std::span<const double> values() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

// Entropy in nats with the Boltzmann constant fixed to 1.
struct EntropyValue {
  double q = 1.0;
  double value = 0.0;
};

// p_i = |box_i| / n in box order. Throws ConsistencyError when the boxes do
// not hold exactly n nodes.
ProbabilityVector box_probabilities(const BoxCovering& covering,
                                    std::size_t n);

// Deformed logarithm (x^(1-q) - 1) / (1 - q); ln x near q = 1.
// Throws DomainError for x <= 0.
double q_log(double x, double q);

// Tsallis entropy (1 - sum p_i^q) / (q - 1), with p_i^q = exp(q ln p_i).
//
// For |q - 1| < 0.5 it is evaluated as -sum_i p_i expm1((q-1) ln p_i) / (q-1),
// the same quantity when the p_i sum to one, which avoids the cancellation in
// 1 - sum p_i^q as q approaches 1. Further out the literal form is kept so
// that q = 0 gives exactly N - 1 and q > 1 never exceeds 1 / (q - 1).
// Falls back to shannon_entropy when |q - 1| < kShannonThreshold.
EntropyValue tsallis_entropy(const ProbabilityVector& p, double q);

// -sum p_i ln p_i.
EntropyValue shannon_entropy(const ProbabilityVector& p);

// Information volume of a network; numerically identical to the Tsallis
// entropy.
double information_volume(const ProbabilityVector& p, double q);

}  // namespace netdim
