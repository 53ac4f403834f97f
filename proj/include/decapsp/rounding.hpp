// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "decapsp/types.hpp"

namespace decapsp {

// Exact rational used where a float comparison could flip a decision (bunch radius rule).
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    // Nearest fraction with denominator 10^6; exact for the decimal inputs the CLI accepts.
    static Ratio from_double(double x);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Ratio divided_by(std::int64_t k) const { return {num, den * k}; }
};

// Is a > (1 + slack) * b, evaluated exactly. Infinite a is greater than any finite b.
bool exceeds_scaled(Weight a, Weight b, Ratio slack);

// Powers of (1 + eps) with exponent lookup. Rounded values never fall below their input, and
// comparing two rounded values reduces to comparing exponents.
class GeometricRounder {
  public:
    explicit GeometricRounder(double eps);

    double eps() const { return eps_; }
    // Smallest k with (1+eps)^k >= delta. Requires delta >= 1.
    int exponent(double delta) const;
    double power(int k) const { return table_.at(static_cast<std::size_t>(k)); }
    // 0 maps to 0 and infinity to infinity; values in (0, 1) round up to 1.
    double round(double delta) const;

  private:
    double eps_;
    std::vector<double> table_;
};

// (1+eps)^ceil(log_{1+eps} delta). Throws DomainError unless delta > 0 and 0 < eps < 1.
double rounded(double delta, double eps);

// ceil(log_{base}(x)) for base > 1, x >= 1, computed on the rounder's table so it agrees with exponent().
int ceil_log(double base_minus_one, double x);

} // namespace decapsp
