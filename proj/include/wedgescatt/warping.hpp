#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>

#include "wedgescatt/fourvector.hpp"
#include "wedgescatt/lorentz.hpp"

namespace wedgescatt {

/// Warping matrix Q stored as (1,1)-tensor acting on contravariant vectors.
/// Invariant: g-antisymmetry, <p, Qq> = -<Qp, q>, i.e. (gQ)^T = -(gQ).
class WarpingMatrix {
public:
    static constexpr double antisymmetry_tol = 1e-14;

    WarpingMatrix(const Eigen::MatrixXd& q, double kappa, std::optional<double> eta)
        : q_(q), kappa_(kappa), eta_(eta) {
        if (q.rows() != q.cols() || q.rows() < 2 || q.rows() > max_dim)
            throw std::invalid_argument("WarpingMatrix: matrix must be d x d with d in [2,4]");
        const Eigen::MatrixXd gq = minkowski_metric(dim()) * q_;
        // absolute tolerance for O(1) entries, relative for boosted matrices
        const double tol = antisymmetry_tol * (1.0 + gq.cwiseAbs().maxCoeff());
        if ((gq.transpose() + gq).cwiseAbs().maxCoeff() > tol)
            throw std::invalid_argument("WarpingMatrix: not g-antisymmetric");
    }

    int dim() const { return static_cast<int>(q_.rows()); }
    const Eigen::MatrixXd& matrix() const { return q_; }
    double kappa() const { return kappa_; }
    std::optional<double> eta() const { return eta_; }

    FourVector apply(const FourVector& p) const {
        if (p.dim() != dim()) throw std::invalid_argument("WarpingMatrix: dimension mismatch");
        FourVector y(dim());
        for (int mu = 0; mu < dim(); ++mu) {
            double s = 0;
            for (int nu = 0; nu < dim(); ++nu) s += q_(mu, nu) * p[nu];
            y[mu] = s;
        }
        return y;
    }

    WarpingMatrix scaled(double factor) const {
        return WarpingMatrix(factor * q_, factor * kappa_,
                             eta_ ? std::optional<double>(factor * *eta_) : std::nullopt);
    }

    WarpingMatrix negated() const { return scaled(-1.0); }

private:
    Eigen::MatrixXd q_;
    double kappa_;
    std::optional<double> eta_;
};

/// Reference-wedge warping matrix: kappa couples (x^0, x^1); in d = 4 an
/// additional eta block rotates (x^2, x^3).
inline WarpingMatrix standard_warping(int d, double kappa, std::optional<double> eta = {}) {
    if (d < 2 || d > max_dim) throw std::invalid_argument("standard_warping: d must be in [2,4]");
    if (kappa < 0) throw std::invalid_argument("standard_warping: kappa must be >= 0");
    if (eta.has_value() && d != 4)
        throw std::invalid_argument("standard_warping: eta only valid for d = 4");
    if (d == 4 && !eta.has_value())
        throw std::invalid_argument("standard_warping: eta required for d = 4");
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(d, d);
    q(0, 1) = kappa;
    q(1, 0) = kappa;
    if (d == 4) {
        q(2, 3) = *eta;
        q(3, 2) = -*eta;
    }
    return WarpingMatrix(q, kappa, eta);
}

}  // namespace wedgescatt
