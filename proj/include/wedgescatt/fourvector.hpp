#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wedgescatt {

inline constexpr int max_dim = 4;

/// Contravariant Minkowski vector with signature (+,-,...,-), natural units.
/// Component 0 is time, components 1..d-1 are space.
class FourVector {
public:
    FourVector() = default;

    explicit FourVector(int dim) : dim_(dim) { check_dim(dim); }

    FourVector(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
        check_dim(dim_);
        int mu = 0;
        for (double x : xs) c_[mu++] = x;
    }

    static FourVector zero(int dim) { return FourVector(dim); }

    int dim() const { return dim_; }

    double operator[](int mu) const { return c_[static_cast<std::size_t>(mu)]; }
    double& operator[](int mu) { return c_[static_cast<std::size_t>(mu)]; }

    double time() const { return c_[0]; }

    /// Spatial components as a plain vector of length d-1.
    std::vector<double> spatial() const {
        return std::vector<double>(c_.begin() + 1, c_.begin() + dim_);
    }

    FourVector& operator+=(const FourVector& o) {
        require_same_dim(o);
        for (int mu = 0; mu < dim_; ++mu) c_[mu] += o.c_[mu];
        return *this;
    }
    FourVector& operator-=(const FourVector& o) {
        require_same_dim(o);
        for (int mu = 0; mu < dim_; ++mu) c_[mu] -= o.c_[mu];
        return *this;
    }
    FourVector& operator*=(double s) {
        for (int mu = 0; mu < dim_; ++mu) c_[mu] *= s;
        return *this;
    }

    friend FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
    friend FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
    friend FourVector operator*(double s, FourVector a) { return a *= s; }
    friend FourVector operator-(FourVector a) { return a *= -1.0; }

    double euclidean_norm() const {
        double s = 0;
        for (int mu = 0; mu < dim_; ++mu) s += c_[mu] * c_[mu];
        return std::sqrt(s);
    }

    void require_same_dim(const FourVector& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("FourVector: dimension mismatch");
    }

private:
    static void check_dim(int dim) {
        if (dim < 2 || dim > max_dim)
            throw std::invalid_argument("FourVector: dimension must be in [2,4]");
    }

    std::array<double, max_dim> c_{};
    int dim_ = 2;
};

/// Minkowski scalar product p.q = p^0 q^0 - sum_i p^i q^i.
inline double minkowski_dot(const FourVector& p, const FourVector& q) {
    p.require_same_dim(q);
    double s = p[0] * q[0];
    for (int i = 1; i < p.dim(); ++i) s -= p[i] * q[i];
    return s;
}

}  // namespace wedgescatt
