#pragma once

#include <cmath>

namespace rigidity {

// Neumaier's variant of Kahan summation. Results depend only on the order of
// add() calls, so reducing in a fixed order gives bit-stable totals.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            c_ += (sum_ - t) + x;
        } else {
            c_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    double value() const { return sum_ + c_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

}  // namespace rigidity
