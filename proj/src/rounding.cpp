// Copyright (c) decapsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "decapsp/rounding.hpp"

#include <cmath>
#include <numeric>

namespace decapsp {

namespace {
constexpr double kTableLimit = 1e18;
}

Ratio Ratio::from_double(double x) {
    constexpr std::int64_t den = 1'000'000;
    const auto num = static_cast<std::int64_t>(std::llround(x * static_cast<double>(den)));
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

bool exceeds_scaled(Weight a, Weight b, Ratio slack) {
    if (b >= kInfinity) {
        return false;
    }
    if (a >= kInfinity) {
        return true;
    }
    const __int128 lhs = static_cast<__int128>(a) * slack.den;
    const __int128 rhs = static_cast<__int128>(b) * (slack.den + slack.num);
    return lhs > rhs;
}

GeometricRounder::GeometricRounder(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("rounding parameter must lie in (0,1)");
    }
    const double base = 1.0 + eps;
    double x = 1.0;
    table_.push_back(x);
    while (x < kTableLimit) {
        x *= base;
        table_.push_back(x);
    }
}

int GeometricRounder::exponent(double delta) const {
    if (!(delta >= 1.0) || delta > table_.back()) {
        throw DomainError("value outside the rounding table");
    }
    auto k = static_cast<std::size_t>(std::max(0.0, std::ceil(std::log(delta) / std::log1p(eps_))));
    k = std::min(k, table_.size() - 1);
    while (table_[k] < delta) {
        ++k;
    }
    while (k > 0 && table_[k - 1] >= delta) {
        --k;
    }
    return static_cast<int>(k);
}

double GeometricRounder::round(double delta) const {
    if (delta <= 0.0) {
        return 0.0;
    }
    if (std::isinf(delta)) {
        return delta;
    }
    return table_[static_cast<std::size_t>(exponent(std::max(delta, 1.0)))];
}

double rounded(double delta, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw DomainError("rounding parameter must lie in (0,1)");
    }
    if (!(delta > 0.0)) {
        throw DomainError("rounded value requires a positive input");
    }
    if (std::isinf(delta)) {
        return delta;
    }
    if (delta >= 1.0) {
        return GeometricRounder(eps).round(delta);
    }
    const double base = 1.0 + eps;
    auto k = static_cast<int>(std::ceil(std::log(delta) / std::log1p(eps)));
    while (std::pow(base, k) < delta) {
        ++k;
    }
    while (std::pow(base, k - 1) >= delta) {
        --k;
    }
    return std::pow(base, k);
}

int ceil_log(double base_minus_one, double x) { return GeometricRounder(base_minus_one).exponent(std::max(x, 1.0)); }

} // namespace decapsp
