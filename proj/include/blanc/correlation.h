// Copyright 2026 The BLANC-cpp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLANC_CORRELATION_H_
#define BLANC_CORRELATION_H_

#include <span>
#include <vector>

namespace blanc {

struct CorrelationResult {
  double coefficient = 0.0;  // in [-1, 1]
  double p_value = 1.0;      // two-sided
  int n = 0;
};

// Product-moment correlation. The p-value comes from the t statistic with
// n - 2 degrees of freedom, evaluated as I_{1 - r^2}((n - 2) / 2, 1 / 2).
// Throws Error(kDegenerateInput) when the lengths differ, n < 3, or either
// series is constant.
CorrelationResult Pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson on average ranks (ties share the mean of their ranks), with the
// same p-value approximation.
CorrelationResult Spearman(std::span<const double> xs,
                           std::span<const double> ys);

// 1-based average ranks.
std::vector<double> AverageRanks(std::span<const double> values);

}  // namespace blanc

#endif  // BLANC_CORRELATION_H_
