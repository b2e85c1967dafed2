#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ptail {

// Validated sample of positive finite observations, stored in ascending
// order. All estimators operate on this type.
class SortedSample {
public:
    explicit SortedSample(std::vector<double> values) : values_(std::move(values)) {
        if (values_.size() < 2)
            throw std::invalid_argument("SortedSample: need at least 2 observations");
        for (double v : values_) {
            if (!std::isfinite(v)) throw std::invalid_argument("SortedSample: non-finite value");
            if (v <= 0.0) throw std::invalid_argument("SortedSample: non-positive value");
        }
        std::sort(values_.begin(), values_.end());
    }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    double min() const noexcept { return values_.front(); }
    double max() const noexcept { return values_.back(); }
    std::span<const double> values() const noexcept { return values_; }
    const double* data() const noexcept { return values_.data(); }

    // Index of the first observation >= u (== size() when none).
    std::size_t first_at_least(double u) const noexcept {
        return static_cast<std::size_t>(
            std::lower_bound(values_.begin(), values_.end(), u) - values_.begin());
    }

    // Empirical quantile with linear interpolation between order statistics.
    double quantile(double p) const {
        if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("quantile: p outside (0,1]");
        const double idx = p * static_cast<double>(values_.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(idx);
        if (lo + 1 >= values_.size()) return values_.back();
        const double frac = idx - static_cast<double>(lo);
        return values_[lo] * (1.0 - frac) + values_[lo + 1] * frac;
    }

private:
    std::vector<double> values_;
};

}  // namespace ptail
