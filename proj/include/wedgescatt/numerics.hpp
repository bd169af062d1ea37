#pragma once

#include <cmath>

namespace wedgescatt {

/// Neumaier compensated accumulator; keeps pairwise phase sums accurate at
/// the 1e-13 scale targeted by the verification tolerances.
struct CompensatedSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    double value() const { return s + c; }
};

}  // namespace wedgescatt
