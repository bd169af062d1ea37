#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "wedgescatt/dispersion.hpp"
#include "wedgescatt/fourvector.hpp"

namespace wedgescatt {

/// Finite set of distinct spatial momentum modes with their on-shell vectors
/// khat_i = (omega_m(k_i), k_i); the discretized one-particle space.
class ModeSet {
public:
    ModeSet(int dim, double mass, std::vector<std::vector<double>> momenta)
        : dim_(dim), mass_(mass), momenta_(std::move(momenta)) {
        if (dim < 2 || dim > max_dim) throw std::invalid_argument("ModeSet: dimension in [2,4]");
        if (mass <= 0) throw std::invalid_argument("ModeSet: mass must be positive");
        if (momenta_.empty()) throw std::invalid_argument("ModeSet: need at least one mode");
        for (const auto& k : momenta_)
            if (static_cast<int>(k.size()) != dim - 1)
                throw std::invalid_argument("ModeSet: momentum has wrong spatial dimension");
        for (std::size_t i = 0; i < momenta_.size(); ++i)
            for (std::size_t j = i + 1; j < momenta_.size(); ++j) {
                double d2 = 0;
                for (int c = 0; c < dim - 1; ++c) {
                    const double d = momenta_[i][c] - momenta_[j][c];
                    d2 += d * d;
                }
                if (d2 <= 1e-24) throw std::invalid_argument("ModeSet: modes must be distinct");
            }
        onshell_.reserve(momenta_.size());
        for (const auto& k : momenta_) onshell_.push_back(on_shell(mass, k));
    }

    int dim() const { return dim_; }
    double mass() const { return mass_; }
    int size() const { return static_cast<int>(momenta_.size()); }

    std::span<const double> momentum(int i) const { return momenta_[static_cast<std::size_t>(i)]; }
    const FourVector& onshell(int i) const { return onshell_[static_cast<std::size_t>(i)]; }
    std::vector<double> mode_velocity(int i) const { return velocity(mass_, momentum(i)); }

private:
    int dim_;
    double mass_;
    std::vector<std::vector<double>> momenta_;
    std::vector<FourVector> onshell_;
};

}  // namespace wedgescatt
