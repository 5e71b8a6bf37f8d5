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

#include "qpc/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace qpc {

namespace {

// Lower-series and upper-continued-fraction evaluations of the regularized
// incomplete gamma function (Numerical Recipes style).
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double binomial_sigma(double p, uint64_t n) {
    if (n == 0) throw std::invalid_argument("binomial_sigma needs n > 0");
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

bool within_k_sigma(uint64_t observed, uint64_t n, double p, double k) {
    const double phat = static_cast<double>(observed) / static_cast<double>(n);
    return std::abs(phat - p) <= k * binomial_sigma(p, n);
}

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q domain error");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_uniform(const std::vector<uint64_t>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("need at least two cells");
    uint64_t total = 0;
    for (uint64_t c : counts) total += c;
    if (total == 0) throw std::invalid_argument("empty sample");
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (uint64_t c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

double chi_square_p_value(double statistic, uint32_t df) {
    if (df == 0) throw std::invalid_argument("df must be positive");
    return gamma_q(df / 2.0, statistic / 2.0);
}

}  // namespace qpc
