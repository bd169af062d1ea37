#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "wedgescatt/fock_basis.hpp"
#include "wedgescatt/fock_operator.hpp"

namespace wedgescatt {

/// Joint spectral resolution of the energy-momentum operators on the tuple
/// basis: tuples with equal total eigenvalue are grouped into one projection.
class SpectralDecomposition {
public:
    explicit SpectralDecomposition(FockBasisPtr basis, double tol = 1e-9)
        : basis_(std::move(basis)) {
        const int dim = basis_->dim();
        std::vector<int> order(static_cast<std::size_t>(dim));
        std::iota(order.begin(), order.end(), 0);
        const int d = basis_->modes().dim();
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const FourVector &pa = basis_->eigenvalue(a), &pb = basis_->eigenvalue(b);
            for (int mu = 0; mu < d; ++mu)
                if (pa[mu] != pb[mu]) return pa[mu] < pb[mu];
            return a < b;
        });
        group_of_.assign(static_cast<std::size_t>(dim), -1);
        for (int r = 0; r < dim; ++r) {
            const int idx = order[static_cast<std::size_t>(r)];
            bool merge = false;
            if (r > 0) {
                const int prev = order[static_cast<std::size_t>(r) - 1];
                merge = (basis_->eigenvalue(idx) - basis_->eigenvalue(prev)).euclidean_norm() <= tol;
            }
            if (!merge) {
                groups_.emplace_back();
                eigenvalues_.push_back(basis_->eigenvalue(idx));
            }
            groups_.back().push_back(idx);
            group_of_[static_cast<std::size_t>(idx)] = static_cast<int>(groups_.size()) - 1;
        }
    }

    const FockBasisPtr& basis_ptr() const { return basis_; }
    int group_count() const { return static_cast<int>(groups_.size()); }
    const std::vector<int>& group_members(int g) const {
        return groups_[static_cast<std::size_t>(g)];
    }
    const FourVector& group_eigenvalue(int g) const {
        return eigenvalues_[static_cast<std::size_t>(g)];
    }
    int group_of(int index) const { return group_of_[static_cast<std::size_t>(index)]; }

    /// Orthogonal projection E(p_g) onto the eigenspace of group g.
    FockOperator projector(int g) const {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis_->dim(), basis_->dim());
        for (int i : group_members(g)) m(i, i) = 1.0;
        return FockOperator(basis_, std::move(m), true);
    }

    /// Largest violation of the spectral condition omega >= |k| over the
    /// joint spectrum (zero for on-shell mode sums).
    double forward_cone_defect() const {
        double worst = 0.0;
        for (const auto& p : eigenvalues_) {
            double k2 = 0;
            for (int i = 1; i < p.dim(); ++i) k2 += p[i] * p[i];
            worst = std::max(worst, std::sqrt(k2) - p[0]);
        }
        return worst;
    }

private:
    FockBasisPtr basis_;
    std::vector<std::vector<int>> groups_;
    std::vector<FourVector> eigenvalues_;
    std::vector<int> group_of_;
};

}  // namespace wedgescatt
