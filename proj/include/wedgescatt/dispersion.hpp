#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "wedgescatt/fourvector.hpp"

namespace wedgescatt {

/// Relativistic dispersion omega_m(k) = sqrt(k^2 + m^2).
inline double dispersion(double m, std::span<const double> k) {
    if (m <= 0) throw std::invalid_argument("dispersion: mass must be positive");
    double k2 = 0;
    for (double ki : k) k2 += ki * ki;
    return std::sqrt(k2 + m * m);
}

/// Group velocity v_m(k) = k / omega_m(k); always subluminal.
inline std::vector<double> velocity(double m, std::span<const double> k) {
    const double w = dispersion(m, k);
    std::vector<double> v(k.begin(), k.end());
    for (double& vi : v) vi /= w;
    return v;
}

/// On-shell momentum (omega_m(k), k).
inline FourVector on_shell(double m, std::span<const double> k) {
    FourVector p(static_cast<int>(k.size()) + 1);
    p[0] = dispersion(m, k);
    for (std::size_t i = 0; i < k.size(); ++i) p[static_cast<int>(i) + 1] = k[i];
    return p;
}

}  // namespace wedgescatt
