#pragma once

#include <cmath>

namespace primeap {

/// Neumaier-compensated accumulator. Tracks the rounding error of every
/// addition and folds it back into the final value, so long sums stay
/// accurate to a few ulp independent of length.
struct kahan_sum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        const double t = sum + value;
        if (std::abs(sum) >= std::abs(value))
            compensation += (sum - t) + value;
        else
            compensation += (value - t) + sum;
        sum = t;
    }

    kahan_sum& operator+=(double value) {
        add(value);
        return *this;
    }

    double value() const { return sum + compensation; }
};

}  // namespace primeap
