#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wedgescatt/profile.hpp"

namespace wedgescatt {

/// Tensor-grid trapezoidal quadrature resolution for packet evaluation.
struct PacketGrid {
    int points_per_axis = 256;
};

/// Space-time evaluation of a Klein-Gordon solution,
///   f(t, x) = (2 pi)^{-s} integral d^s k  e^{i k.x - i omega_m(k) t} ftilde(k),
/// by trapezoid over the support box. Deterministic for a fixed grid.
inline std::complex<double> evaluate(const KGSolution& f, double t, std::span<const double> x,
                                     const PacketGrid& grid) {
    const int s = f.spatial_dim();
    if (static_cast<int>(x.size()) != s)
        throw std::invalid_argument("evaluate: spatial dimension mismatch");
    if (grid.points_per_axis < 16)
        throw std::invalid_argument("evaluate: grid too coarse (< 16 points per support diameter)");

    if (!f.profile.is_bump()) {
        // lattice packet: plain mode sum with unit weights
        std::complex<double> acc = 0.0;
        for (const auto& k : f.profile.support_vertices()) {
            double kx = 0;
            for (int i = 0; i < s; ++i) kx += k[i] * x[i];
            const double w = dispersion(f.mass, k);
            acc += f.profile.amplitude(k) * std::polar(1.0, kx - w * t);
        }
        return acc / std::pow(2.0 * std::numbers::pi, s);
    }

    const auto box = f.profile.support_box();
    const int n = grid.points_per_axis;
    std::vector<double> step(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) step[i] = (box[i].second - box[i].first) / (n - 1);

    std::complex<double> acc = 0.0;
    std::vector<double> k(static_cast<std::size_t>(s));
    std::vector<int> idx(static_cast<std::size_t>(s), 0);
    const auto axis_weight = [n](int j) { return (j == 0 || j == n - 1) ? 0.5 : 1.0; };
    while (true) {
        double w = 1.0;
        for (int i = 0; i < s; ++i) {
            k[i] = box[i].first + idx[i] * step[i];
            w *= axis_weight(idx[i]) * step[i];
        }
        const std::complex<double> amp = f.profile.amplitude(k);
        if (amp != 0.0) {
            double kx = 0;
            for (int i = 0; i < s; ++i) kx += k[i] * x[i];
            acc += w * amp * std::polar(1.0, kx - dispersion(f.mass, k) * t);
        }
        int axis = 0;
        while (axis < s && ++idx[axis] == n) idx[axis++] = 0;
        if (axis == s) break;
    }
    return acc / std::pow(2.0 * std::numbers::pi, s);
}

/// Samples |f| along the ray x = u * tau.
inline std::vector<std::pair<double, double>> decay_scan(const KGSolution& f,
                                                         std::span<const double> u,
                                                         std::span<const double> times,
                                                         const PacketGrid& grid) {
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] < times[i + 1]))
            throw std::invalid_argument("decay_scan: times must be increasing");
    std::vector<std::pair<double, double>> out;
    out.reserve(times.size());
    std::vector<double> x(u.size());
    for (double tau : times) {
        for (std::size_t i = 0; i < u.size(); ++i) x[i] = u[i] * tau;
        out.emplace_back(tau, std::abs(evaluate(f, tau, x, grid)));
    }
    return out;
}

/// Least-squares slope of log|f| against log tau over the last decade of the
/// sampled times (tau >= tau_max / 10). Entries with nonpositive tau or |f|
/// are skipped.
inline double fit_decay_slope(const std::vector<std::pair<double, double>>& scan) {
    if (scan.empty()) throw std::invalid_argument("fit_decay_slope: empty scan");
    const double tau_max = scan.back().first;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& [tau, a] : scan) {
        if (tau < tau_max / 10.0 || tau <= 0 || a <= 0) continue;
        const double lx = std::log(tau), ly = std::log(a);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) throw std::invalid_argument("fit_decay_slope: not enough usable samples");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wedgescatt
