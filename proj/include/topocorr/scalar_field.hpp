#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "topocorr/errors.hpp"

namespace topocorr {

/// Per-vertex real values of a function sampled on a complex. All values are
/// finite; immutable after construction.
class ScalarField {
public:
    ScalarField() = default;

    explicit ScalarField(std::vector<double> values) : values_(std::move(values)) {
        for (double v : values_) {
            if (!std::isfinite(v)) {
                throw NonFiniteValueError("scalar field value is not finite");
            }
        }
    }

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::fabs(v));
        return m;
    }

    friend bool operator==(const ScalarField&, const ScalarField&) = default;

private:
    std::vector<double> values_;
};

/// A pair of scalar fields over one complex: the bifiltering function.
class Bifunction {
public:
    Bifunction() = default;

    Bifunction(ScalarField first, ScalarField second)
        : first_(std::move(first)), second_(std::move(second)) {
        if (first_.size() != second_.size()) {
            throw DimensionMismatchError("bifunction components have different lengths");
        }
    }

    const ScalarField& first() const { return first_; }
    const ScalarField& second() const { return second_; }
    std::size_t size() const { return first_.size(); }

    Bifunction swapped() const { return Bifunction(second_, first_); }

private:
    ScalarField first_;
    ScalarField second_;
};

} // namespace topocorr
