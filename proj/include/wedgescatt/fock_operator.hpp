#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wedgescatt/fock_basis.hpp"
#include "wedgescatt/fock_vector.hpp"
#include "wedgescatt/lorentz.hpp"

namespace wedgescatt {

/// Dense operator on the truncated Fock space. Block structure between
/// sectors is implicit in the single matrix; `raising_reach` records how far
/// the operator moves amplitude up in particle number so that truncation is
/// never silent when the top sector is populated.
class FockOperator {
public:
    FockOperator(FockBasisPtr basis, Eigen::MatrixXcd mat, bool preserves_symmetry = false,
                 std::optional<int> ladder_mode = {})
        : basis_(std::move(basis)), mat_(std::move(mat)),
          preserves_symmetry_(preserves_symmetry), ladder_mode_(ladder_mode) {
        if (mat_.rows() != basis_->dim() || mat_.cols() != basis_->dim())
            throw std::invalid_argument("FockOperator: matrix size mismatch");
        raise_reach_ = 0;
        for (int r = 0; r < mat_.rows(); ++r)
            for (int c = 0; c < mat_.cols(); ++c)
                if (mat_(r, c) != 0.0)
                    raise_reach_ = std::max(raise_reach_,
                                            basis_->sector_of(r) - basis_->sector_of(c));
    }

    const FockBasis& basis() const { return *basis_; }
    const FockBasisPtr& basis_ptr() const { return basis_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    int raising_reach() const { return raise_reach_; }
    bool preserves_symmetry() const { return preserves_symmetry_; }

    FockOperator adjoint() const {
        return FockOperator(basis_, mat_.adjoint(), preserves_symmetry_);
    }

    FockVector apply(const FockVector& v) const {
        if (v.basis_ptr().get() != basis_.get())
            throw std::invalid_argument("FockOperator: basis mismatch");
        FockVector out(basis_, preserves_symmetry_ ? v.rep() : FockRep::unordered_tensor);
        out.amplitudes() = mat_ * v.amplitudes();
        out.add_discarded_sq(v.discarded_norm() * v.discarded_norm());
        if (raise_reach_ > 0) {
            double risky = 0.0;
            const int first_risky = basis_->sector_offset(basis_->n_max() - raise_reach_ + 1);
            for (int i = first_risky; i < basis_->dim(); ++i) risky += std::norm(v[i]);
            if (risky > 1e-30) {
                if (!ladder_mode_)
                    throw std::runtime_error(
                        "FockOperator: truncation overflow for a non-ladder operator");
                out.add_discarded_sq(creation_overflow_sq(v));
            }
        }
        return out;
    }

    friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
        a.require_same_basis(b);
        return FockOperator(a.basis_, a.mat_ * b.mat_,
                            a.preserves_symmetry_ && b.preserves_symmetry_);
    }
    friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
        a.require_same_basis(b);
        return FockOperator(a.basis_, a.mat_ + b.mat_,
                            a.preserves_symmetry_ && b.preserves_symmetry_);
    }
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
        a.require_same_basis(b);
        return FockOperator(a.basis_, a.mat_ - b.mat_,
                            a.preserves_symmetry_ && b.preserves_symmetry_);
    }
    friend FockOperator operator*(std::complex<double> c, const FockOperator& a) {
        return FockOperator(a.basis_, c * a.mat_, a.preserves_symmetry_);
    }

    double max_abs_difference(const FockOperator& o) const {
        require_same_basis(o);
        return (mat_ - o.mat_).cwiseAbs().maxCoeff();
    }

    void require_same_basis(const FockOperator& o) const {
        if (basis_.get() != o.basis_.get())
            throw std::invalid_argument("FockOperator: basis mismatch");
    }

private:
    /// Exact norm^2 of the part of a*(i) v pushed past the truncation: the
    /// (N+1)-slot symmetrization of the top-sector amplitudes, accumulated in
    /// a transient buffer and dropped.
    double creation_overflow_sq(const FockVector& v) const {
        const int n = basis_->n_max();
        const int m = basis_->modes().size();
        long long over_dim = 1;
        for (int a = 0; a <= n; ++a) over_dim *= m;
        std::vector<std::complex<double>> buf(static_cast<std::size_t>(over_dim), 0.0);
        std::vector<int> ext(static_cast<std::size_t>(n) + 1);
        std::vector<int> pos(static_cast<std::size_t>(n) + 1);
        const double coeff = 1.0 / (std::sqrt(n + 1.0) * std::tgamma(n + 1.0));
        for (int idx = basis_->sector_offset(n); idx < basis_->dim(); ++idx) {
            const std::complex<double> amp = v[idx];
            if (amp == 0.0) continue;
            const auto t = basis_->tuple_of(idx);
            ext[0] = *ladder_mode_;
            std::copy(t.begin(), t.end(), ext.begin() + 1);
            std::iota(pos.begin(), pos.end(), 0);
            do {
                long long r = 0;
                for (int p : pos) r = r * m + ext[static_cast<std::size_t>(p)];
                buf[static_cast<std::size_t>(r)] += coeff * amp;
            } while (std::next_permutation(pos.begin(), pos.end()));
        }
        double s = 0.0;
        for (const auto& z : buf) s += std::norm(z);
        return s;
    }

    FockBasisPtr basis_;
    Eigen::MatrixXcd mat_;
    int raise_reach_ = 0;
    bool preserves_symmetry_ = false;
    std::optional<int> ladder_mode_;
};

inline FockOperator identity_op(const FockBasisPtr& basis) {
    return FockOperator(basis, Eigen::MatrixXcd::Identity(basis->dim(), basis->dim()), true);
}

/// Diagonal operator from a per-tuple complex value.
inline FockOperator diagonal_op(const FockBasisPtr& basis,
                                const std::function<std::complex<double>(int)>& value,
                                bool preserves_symmetry = false) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int i = 0; i < basis->dim(); ++i) m(i, i) = value(i);
    return FockOperator(basis, std::move(m), preserves_symmetry);
}

/// Bosonic creation a*(i): sqrt(n+1) times the (n+1)-slot symmetrization of
/// e_i tensor (.), which restricts to the standard sqrt(occupation) ladder on
/// the symmetric sectors and appends a slot on unordered tensors.
inline FockOperator create_op(const FockBasisPtr& basis, int mode) {
    if (mode < 0 || mode >= basis->modes().size())
        throw std::invalid_argument("create_op: bad mode index");
    const int m = basis->modes().size();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int n = 0; n + 1 <= basis->n_max(); ++n) {
        const double coeff = 1.0 / (std::sqrt(n + 1.0) * std::tgamma(n + 1.0));
        std::vector<int> ext(static_cast<std::size_t>(n) + 1);
        std::vector<int> pos(static_cast<std::size_t>(n) + 1);
        for (int idx = basis->sector_offset(n); idx < basis->sector_offset(n + 1); ++idx) {
            const auto t = basis->tuple_of(idx);
            ext[0] = mode;
            std::copy(t.begin(), t.end(), ext.begin() + 1);
            std::iota(pos.begin(), pos.end(), 0);
            do {
                int r = 0;
                for (int p : pos) r = r * m + ext[static_cast<std::size_t>(p)];
                mat(basis->sector_offset(n + 1) + r, idx) += coeff;
            } while (std::next_permutation(pos.begin(), pos.end()));
        }
    }
    return FockOperator(basis, std::move(mat), true, mode);
}

inline FockOperator annihilate_op(const FockBasisPtr& basis, int mode) {
    return create_op(basis, mode).adjoint();
}

/// Space-time translation U(x): diagonal phase e^{i <x, p>} per tuple, with
/// <x, p> = x^0 p^0 - x.p the Minkowski pairing of x with the eigenvalue.
inline FockOperator translate_op(const FockBasisPtr& basis, const FourVector& x) {
    if (x.dim() != basis->modes().dim())
        throw std::invalid_argument("translate_op: dimension mismatch");
    return diagonal_op(
        basis,
        [&](int i) { return std::polar(1.0, minkowski_dot(x, basis->eigenvalue(i))); }, true);
}

/// Component mu of the slot energy-momentum P_slot (0-based slot); zero on
/// sectors with fewer than slot+1 particles.
inline FockOperator slot_momentum_op(const FockBasisPtr& basis, int slot, int mu) {
    return diagonal_op(basis, [&](int i) -> std::complex<double> {
        const auto t = basis->tuple_of(i);
        if (static_cast<int>(t.size()) <= slot) return 0.0;
        return basis->modes().onshell(t[static_cast<std::size_t>(slot)])[mu];
    });
}

/// Slot-order reversal Z: (i_1..i_n) -> (i_n..i_1).
inline FockOperator reversal_op(const FockBasisPtr& basis) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int i = 0; i < basis->dim(); ++i) {
        auto t = basis->tuple_of(i);
        std::reverse(t.begin(), t.end());
        m(basis->index_of(t), i) = 1.0;
    }
    return FockOperator(basis, std::move(m), true);
}

/// Orthogonal projection onto the symmetric (bosonic) subspace.
inline FockOperator symmetrizer_op(const FockBasisPtr& basis) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int idx = 0; idx < basis->dim(); ++idx) {
        auto t = basis->tuple_of(idx);
        const int n = static_cast<int>(t.size());
        if (n == 0) {
            m(0, 0) = 1.0;
            continue;
        }
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::iota(pos.begin(), pos.end(), 0);
        const double coeff = 1.0 / std::tgamma(n + 1.0);
        std::vector<int> perm(static_cast<std::size_t>(n));
        do {
            for (int a = 0; a < n; ++a)
                perm[static_cast<std::size_t>(a)] = t[static_cast<std::size_t>(pos[a])];
            m(basis->index_of(perm), idx) += coeff;
        } while (std::next_permutation(pos.begin(), pos.end()));
    }
    return FockOperator(basis, std::move(m), true);
}

/// Second-quantized mode permutation (the unitary of a Lorentz map that
/// permutes the mode set).
inline FockOperator mode_permutation_op(const FockBasisPtr& basis, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != basis->modes().size())
        throw std::invalid_argument("mode_permutation_op: permutation size mismatch");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int i = 0; i < basis->dim(); ++i) {
        auto t = basis->tuple_of(i);
        for (int& a : t) a = perm[static_cast<std::size_t>(a)];
        m(basis->index_of(t), i) = 1.0;
    }
    return FockOperator(basis, std::move(m), true);
}

/// Permutation of the mode set induced by a Lorentz map, if the map sends
/// every on-shell vector to another mode's on-shell vector.
inline std::optional<std::vector<int>> lorentz_mode_permutation(const ModeSet& modes,
                                                                const LorentzMap& l,
                                                                double tol = 1e-9) {
    std::vector<int> perm(static_cast<std::size_t>(modes.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(modes.size()), false);
    for (int i = 0; i < modes.size(); ++i) {
        const FourVector img = l.apply(modes.onshell(i));
        for (int j = 0; j < modes.size(); ++j) {
            if (!used[static_cast<std::size_t>(j)] &&
                (img - modes.onshell(j)).euclidean_norm() <= tol) {
                perm[static_cast<std::size_t>(i)] = j;
                used[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
        if (perm[static_cast<std::size_t>(i)] < 0) return std::nullopt;
    }
    return perm;
}

}  // namespace wedgescatt
