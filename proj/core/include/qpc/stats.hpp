// Copyright 2026 The qpcsim Authors
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

#ifndef QPC_STATS_HPP
#define QPC_STATS_HPP

#include <cstdint>
#include <vector>

namespace qpc {

/// Standard deviation of a binomial proportion estimate.
double binomial_sigma(double p, uint64_t n);

/// |observed/n - p| <= k * binomial_sigma(p, n).
bool within_k_sigma(uint64_t observed, uint64_t n, double p, double k);

/// Regularized upper incomplete gamma Q(a, x), for chi-square tails.
double gamma_q(double a, double x);

/// Pearson chi-square statistic against a uniform expectation.
double chi_square_uniform(const std::vector<uint64_t>& counts);

/// Survival p-value of a chi-square statistic with df degrees of freedom.
double chi_square_p_value(double statistic, uint32_t df);

}  // namespace qpc

#endif
