#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "wedgescatt/fock_basis.hpp"

namespace wedgescatt {

enum class FockRep { unordered_tensor, bosonic_symmetric };

/// State on the truncated Fock space: amplitudes over all slot tuples, a
/// representation flag, and the accumulated norm discarded by truncation.
class FockVector {
public:
    FockVector(FockBasisPtr basis, FockRep rep = FockRep::unordered_tensor)
        : basis_(std::move(basis)), amp_(Eigen::VectorXcd::Zero(basis_->dim())), rep_(rep) {}

    static FockVector vacuum(FockBasisPtr basis) {
        FockVector v(std::move(basis), FockRep::bosonic_symmetric);
        v.amp_(0) = 1.0;
        return v;
    }

    const FockBasis& basis() const { return *basis_; }
    const FockBasisPtr& basis_ptr() const { return basis_; }
    FockRep rep() const { return rep_; }
    void set_rep(FockRep r) { rep_ = r; }

    Eigen::VectorXcd& amplitudes() { return amp_; }
    const Eigen::VectorXcd& amplitudes() const { return amp_; }
    std::complex<double> operator[](int i) const { return amp_(i); }
    std::complex<double>& operator[](int i) { return amp_(i); }

    double norm() const { return amp_.norm(); }
    double discarded_norm() const { return std::sqrt(discarded_sq_); }
    void add_discarded_sq(double x) { discarded_sq_ += x; }

    /// Max deviation from slot-permutation symmetry over 2-cycles; zero for
    /// genuinely bosonic amplitudes.
    double symmetry_defect() const {
        double worst = 0.0;
        for (int idx = 0; idx < basis_->dim(); ++idx) {
            auto t = basis_->tuple_of(idx);
            for (std::size_t a = 0; a + 1 < t.size(); ++a) {
                std::swap(t[a], t[a + 1]);
                worst = std::max(worst, std::abs(amp_(idx) - amp_(basis_->index_of(t))));
                std::swap(t[a], t[a + 1]);
            }
        }
        return worst;
    }

    FockVector& operator+=(const FockVector& o) {
        require_same_basis(o);
        amp_ += o.amp_;
        discarded_sq_ += o.discarded_sq_;
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        require_same_basis(o);
        amp_ -= o.amp_;
        discarded_sq_ += o.discarded_sq_;
        return *this;
    }
    FockVector& operator*=(std::complex<double> c) {
        amp_ *= c;
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(std::complex<double> c, FockVector a) { return a *= c; }

    /// Hermitian inner product, antilinear in the first argument.
    friend std::complex<double> inner(const FockVector& a, const FockVector& b) {
        a.require_same_basis(b);
        return a.amp_.dot(b.amp_);
    }

    void require_same_basis(const FockVector& o) const {
        if (basis_.get() != o.basis_.get())
            throw std::invalid_argument("FockVector: basis mismatch");
    }

private:
    FockBasisPtr basis_;
    Eigen::VectorXcd amp_;
    FockRep rep_;
    double discarded_sq_ = 0.0;
};

}  // namespace wedgescatt
