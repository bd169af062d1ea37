#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "wedgescatt/fourvector.hpp"

namespace wedgescatt {

/// Metric diag(+1,-1,...,-1) as a dense matrix.
inline Eigen::MatrixXd minkowski_metric(int dim) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim, dim);
    for (int i = 1; i < dim; ++i) g(i, i) = -1.0;
    return g;
}

/// Proper orthochronous Lorentz transformation.
/// Validated on construction: Lambda^T g Lambda = g, det = +1, Lambda^0_0 >= 1.
class LorentzMap {
public:
    static constexpr double validation_tol = 1e-12;

    static LorentzMap identity(int dim) {
        return LorentzMap(Eigen::MatrixXd::Identity(dim, dim), NoCheck{});
    }

    /// Boost of given rapidity along spatial axis `axis` (1-based space index).
    static LorentzMap boost(int dim, int axis, double rapidity) {
        if (axis < 1 || axis >= dim) throw std::invalid_argument("LorentzMap: bad boost axis");
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
        const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
        m(0, 0) = ch;
        m(0, axis) = sh;
        m(axis, 0) = sh;
        m(axis, axis) = ch;
        return LorentzMap(m, NoCheck{});
    }

    /// Rotation by `angle` in the spatial (i,j) plane (1-based space indices).
    static LorentzMap rotation(int dim, int i, int j, double angle) {
        if (i < 1 || j < 1 || i >= dim || j >= dim || i == j)
            throw std::invalid_argument("LorentzMap: bad rotation plane");
        Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
        const double c = std::cos(angle), s = std::sin(angle);
        m(i, i) = c;
        m(j, j) = c;
        m(i, j) = -s;
        m(j, i) = s;
        return LorentzMap(m, NoCheck{});
    }

    static LorentzMap from_matrix(const Eigen::MatrixXd& m) { return LorentzMap(m); }

    explicit LorentzMap(const Eigen::MatrixXd& m) : m_(m) {
        if (m.rows() != m.cols() || m.rows() < 2 || m.rows() > max_dim)
            throw std::invalid_argument("LorentzMap: matrix must be d x d with d in [2,4]");
        const int d = dim();
        const Eigen::MatrixXd g = minkowski_metric(d);
        const double defect = (m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff();
        if (defect > validation_tol)
            throw std::invalid_argument("LorentzMap: Lambda^T g Lambda != g");
        if (std::abs(m_.determinant() - 1.0) > 1e-10)
            throw std::invalid_argument("LorentzMap: det != +1");
        if (m_(0, 0) < 1.0 - validation_tol)
            throw std::invalid_argument("LorentzMap: not orthochronous");
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    /// Inverse is exact by the metric identity: Lambda^{-1} = g Lambda^T g.
    LorentzMap inverse() const {
        const Eigen::MatrixXd g = minkowski_metric(dim());
        return LorentzMap(g * m_.transpose() * g, NoCheck{});
    }

    FourVector apply(const FourVector& x) const {
        if (x.dim() != dim()) throw std::invalid_argument("LorentzMap: dimension mismatch");
        FourVector y(dim());
        for (int mu = 0; mu < dim(); ++mu) {
            double s = 0;
            for (int nu = 0; nu < dim(); ++nu) s += m_(mu, nu) * x[nu];
            y[mu] = s;
        }
        return y;
    }

    friend LorentzMap operator*(const LorentzMap& a, const LorentzMap& b) {
        return LorentzMap(a.m_ * b.m_, NoCheck{});
    }

private:
    struct NoCheck {};
    LorentzMap(Eigen::MatrixXd m, NoCheck) : m_(std::move(m)) {}

    Eigen::MatrixXd m_;
};

}  // namespace wedgescatt
