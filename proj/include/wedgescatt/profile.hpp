#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "wedgescatt/dispersion.hpp"

namespace wedgescatt {

/// Smooth compactly supported momentum-space amplitude. Either a closed-form
/// C^inf bump exp(-s * delta^2/(delta^2 - |k-k0|^2)) on |k-k0| < delta, or
/// tabulated values on a finite point set (used for mode-lattice packets).
class MomentumProfile {
public:
    static MomentumProfile bump(std::vector<double> center, double radius, int smoothness = 1) {
        if (center.empty() || center.size() > 3)
            throw std::invalid_argument("MomentumProfile: spatial dimension must be in [1,3]");
        if (radius <= 0) throw std::invalid_argument("MomentumProfile: radius must be positive");
        if (smoothness < 1) throw std::invalid_argument("MomentumProfile: smoothness must be >= 1");
        MomentumProfile p;
        p.sdim_ = static_cast<int>(center.size());
        p.center_ = std::move(center);
        p.radius_ = radius;
        p.smoothness_ = smoothness;
        return p;
    }

    static MomentumProfile tabulated(std::vector<std::vector<double>> points,
                                     std::vector<std::complex<double>> values) {
        if (points.empty() || points.size() != values.size())
            throw std::invalid_argument("MomentumProfile: tabulated points/values mismatch");
        MomentumProfile p;
        p.sdim_ = static_cast<int>(points.front().size());
        for (const auto& pt : points)
            if (static_cast<int>(pt.size()) != p.sdim_)
                throw std::invalid_argument("MomentumProfile: mixed point dimensions");
        p.points_ = std::move(points);
        p.values_ = std::move(values);
        return p;
    }

    int spatial_dim() const { return sdim_; }
    bool is_bump() const { return points_.empty(); }
    double radius() const { return radius_; }
    const std::vector<double>& center() const { return center_; }

    std::complex<double> amplitude(std::span<const double> k) const {
        if (static_cast<int>(k.size()) != sdim_)
            throw std::invalid_argument("MomentumProfile: dimension mismatch");
        if (is_bump()) {
            double r2 = 0;
            for (int i = 0; i < sdim_; ++i) {
                const double di = k[i] - center_[i];
                r2 += di * di;
            }
            const double d2 = radius_ * radius_;
            if (r2 >= d2) return 0.0;
            return std::exp(-smoothness_ * d2 / (d2 - r2));
        }
        for (std::size_t j = 0; j < points_.size(); ++j) {
            double dist2 = 0;
            for (int i = 0; i < sdim_; ++i) {
                const double di = k[i] - points_[j][i];
                dist2 += di * di;
            }
            if (dist2 <= 1e-18) return values_[j];
        }
        throw std::invalid_argument("MomentumProfile: tabulated amplitude requested off its grid");
    }

    /// Points whose hull carries the support; for bumps the ball boundary is
    /// sampled deterministically (exact endpoints when s = 1).
    std::vector<std::vector<double>> support_vertices(int samples = 24) const {
        std::vector<std::vector<double>> out;
        if (!is_bump()) {
            for (std::size_t j = 0; j < points_.size(); ++j)
                if (std::abs(values_[j]) > 0) out.push_back(points_[j]);
            if (out.empty()) throw std::invalid_argument("MomentumProfile: empty support");
            return out;
        }
        if (sdim_ == 1) {
            out.push_back({center_[0] - radius_});
            out.push_back({center_[0] + radius_});
        } else if (sdim_ == 2) {
            for (int a = 0; a < samples; ++a) {
                const double phi = 2.0 * std::numbers::pi * a / samples;
                out.push_back({center_[0] + radius_ * std::cos(phi),
                               center_[1] + radius_ * std::sin(phi)});
            }
        } else {
            const int na = samples / 2;
            for (int a = 1; a < na; ++a) {
                const double th = std::numbers::pi * a / na;
                for (int b = 0; b < samples; ++b) {
                    const double phi = 2.0 * std::numbers::pi * b / samples;
                    out.push_back({center_[0] + radius_ * std::sin(th) * std::cos(phi),
                                   center_[1] + radius_ * std::sin(th) * std::sin(phi),
                                   center_[2] + radius_ * std::cos(th)});
                }
            }
            out.push_back({center_[0], center_[1], center_[2] + radius_});
            out.push_back({center_[0], center_[1], center_[2] - radius_});
        }
        return out;
    }

    /// Axis-aligned bounding box of the support, as (lo, hi) per axis.
    std::vector<std::pair<double, double>> support_box() const {
        std::vector<std::pair<double, double>> box(static_cast<std::size_t>(sdim_));
        if (is_bump()) {
            for (int i = 0; i < sdim_; ++i)
                box[i] = {center_[i] - radius_, center_[i] + radius_};
        } else {
            for (int i = 0; i < sdim_; ++i) box[i] = {points_[0][i], points_[0][i]};
            for (const auto& pt : points_)
                for (int i = 0; i < sdim_; ++i) {
                    box[i].first = std::min(box[i].first, pt[i]);
                    box[i].second = std::max(box[i].second, pt[i]);
                }
        }
        return box;
    }

private:
    MomentumProfile() = default;

    int sdim_ = 1;
    std::vector<double> center_;
    double radius_ = 0;
    int smoothness_ = 1;
    std::vector<std::vector<double>> points_;
    std::vector<std::complex<double>> values_;
};

/// Regular positive-energy Klein-Gordon solution: profile plus mass.
struct KGSolution {
    MomentumProfile profile;
    double mass;

    KGSolution(MomentumProfile p, double m) : profile(std::move(p)), mass(m) {
        if (m <= 0) throw std::invalid_argument("KGSolution: mass gap requires m > 0");
    }

    int spatial_dim() const { return profile.spatial_dim(); }
};

}  // namespace wedgescatt
