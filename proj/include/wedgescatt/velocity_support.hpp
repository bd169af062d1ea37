#pragma once

#include <stdexcept>
#include <vector>

#include "wedgescatt/convex.hpp"
#include "wedgescatt/dispersion.hpp"
#include "wedgescatt/profile.hpp"
#include "wedgescatt/wedge.hpp"

namespace wedgescatt {

/// Velocity support of a wave packet: the intersection of its propagation
/// cone rays with the time-1 hyperplane of the frame Lambda, stored as a
/// convex hull in the original coordinates.
struct VelocitySupport {
    ConvexRegion region;
    LorentzMap frame;
};

/// Image of the on-shell ray through (omega_m(k), k) on the hyperplane
/// Lambda T_1: khat / c with c the time component of Lambda^{-1} khat.
inline FourVector ray_on_frame_slice(double mass, std::span<const double> k,
                                     const LorentzMap& frame) {
    const FourVector khat = on_shell(mass, k);
    const double c = frame.inverse().apply(khat)[0];
    if (c <= 1e-12)
        throw std::runtime_error("velocity_support: ray parallel to frame hyperplane");
    return (1.0 / c) * khat;
}

inline VelocitySupport velocity_support(const KGSolution& f, const LorentzMap& frame,
                                        int boundary_samples = 24) {
    if (frame.dim() != f.spatial_dim() + 1)
        throw std::invalid_argument("velocity_support: frame dimension mismatch");
    std::vector<FourVector> pts;
    for (const auto& k : f.profile.support_vertices(boundary_samples))
        pts.push_back(ray_on_frame_slice(f.mass, k, frame));
    return VelocitySupport{ConvexRegion(std::move(pts)), frame};
}

/// Velocity support of a single lattice mode (a point region).
inline VelocitySupport mode_velocity_support(double mass, std::span<const double> k,
                                             const LorentzMap& frame) {
    return VelocitySupport{ConvexRegion({ray_on_frame_slice(mass, k, frame)}), frame};
}

/// Direction of a velocity-ordering chain.
enum class OrderingDirection { outgoing, incoming };

/// Chain test over consecutive velocity supports: outgoing demands
/// V_{i+1} <_W V_i along the list, incoming the reverse.
inline bool ordered_supports(const std::vector<VelocitySupport>& vs, const Wedge& w,
                             OrderingDirection dir, double margin) {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const bool ok = dir == OrderingDirection::outgoing
                            ? precursor(vs[i + 1].region, vs[i].region, w, margin)
                            : precursor(vs[i].region, vs[i + 1].region, w, margin);
        if (!ok) return false;
    }
    return true;
}

inline bool ordered(const std::vector<KGSolution>& fs, const Wedge& w, const LorentzMap& frame,
                    OrderingDirection dir, double margin = 1e-9) {
    if (fs.empty()) throw std::invalid_argument("ordered: need at least one solution");
    std::vector<VelocitySupport> vs;
    vs.reserve(fs.size());
    for (const auto& f : fs) vs.push_back(velocity_support(f, frame));
    return ordered_supports(vs, w, dir, margin);
}

}  // namespace wedgescatt
