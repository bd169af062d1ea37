#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "wedgescatt/modeset.hpp"

namespace wedgescatt {

/// Slot-tuple basis of the truncated unordered tensor Fock space
/// sum_{n <= N} H_1^{tensor n} over a ModeSet. Sector n is indexed by the
/// M^n tuples (i_1..i_n) in lexicographic order, first slot most significant.
/// The bosonic space is the symmetric subspace in this same indexing.
class FockBasis {
public:
    FockBasis(ModeSet modes, int n_max) : modes_(std::move(modes)), n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("FockBasis: n_max must be >= 0");
        const int m = modes_.size();
        offsets_.resize(static_cast<std::size_t>(n_max_) + 2);
        offsets_[0] = 0;
        long long sector = 1;
        for (int n = 0; n <= n_max_; ++n) {
            offsets_[static_cast<std::size_t>(n) + 1] =
                offsets_[static_cast<std::size_t>(n)] + static_cast<int>(sector);
            if (n < n_max_) {
                sector *= m;
                if (sector > (1 << 22))
                    throw std::invalid_argument("FockBasis: truncation too large for dense storage");
            }
        }
        eigen_.reserve(static_cast<std::size_t>(dim()));
        for (int idx = 0; idx < dim(); ++idx) {
            FourVector p = FourVector::zero(modes_.dim());
            for (int i : tuple_of(idx)) p += modes_.onshell(i);
            eigen_.push_back(p);
        }
    }

    const ModeSet& modes() const { return modes_; }
    int n_max() const { return n_max_; }
    int dim() const { return offsets_.back(); }

    int sector_offset(int n) const { return offsets_[static_cast<std::size_t>(n)]; }
    int sector_dim(int n) const {
        return offsets_[static_cast<std::size_t>(n) + 1] - offsets_[static_cast<std::size_t>(n)];
    }

    int sector_of(int index) const {
        for (int n = 0; n <= n_max_; ++n)
            if (index < offsets_[static_cast<std::size_t>(n) + 1]) return n;
        throw std::out_of_range("FockBasis: index out of range");
    }

    int index_of(std::span<const int> tuple) const {
        const int n = static_cast<int>(tuple.size());
        if (n > n_max_) throw std::out_of_range("FockBasis: tuple longer than truncation");
        int r = 0;
        for (int i : tuple) {
            if (i < 0 || i >= modes_.size()) throw std::out_of_range("FockBasis: bad mode index");
            r = r * modes_.size() + i;
        }
        return sector_offset(n) + r;
    }

    std::vector<int> tuple_of(int index) const {
        const int n = sector_of(index);
        int r = index - sector_offset(n);
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int a = n - 1; a >= 0; --a) {
            t[static_cast<std::size_t>(a)] = r % modes_.size();
            r /= modes_.size();
        }
        return t;
    }

    /// Joint energy-momentum eigenvalue of a basis tuple (sum of on-shell
    /// vectors; the tuple basis diagonalizes all translations).
    const FourVector& eigenvalue(int index) const {
        return eigen_[static_cast<std::size_t>(index)];
    }

private:
    ModeSet modes_;
    int n_max_;
    std::vector<int> offsets_;
    std::vector<FourVector> eigen_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

inline FockBasisPtr make_basis(ModeSet modes, int n_max) {
    return std::make_shared<const FockBasis>(std::move(modes), n_max);
}

}  // namespace wedgescatt
