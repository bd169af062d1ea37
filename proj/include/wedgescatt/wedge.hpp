#pragma once

#include <cmath>

#include "wedgescatt/fourvector.hpp"
#include "wedgescatt/lorentz.hpp"
#include "wedgescatt/warping.hpp"

namespace wedgescatt {

/// Wedge region +-Lambda W_R + a, where W_R = { |x^0| < x^1 } is the Rindler
/// wedge. The sign carries the causal complement; in d = 2 the left wedge is
/// not reachable by a proper orthochronous map, so the flag is the
/// representation of W' in every dimension.
class Wedge {
public:
    Wedge(LorentzMap boost, FourVector translation, bool complemented = false)
        : boost_(std::move(boost)), translation_(std::move(translation)),
          complemented_(complemented) {
        if (boost_.dim() != translation_.dim())
            throw std::invalid_argument("Wedge: boost/translation dimension mismatch");
    }

    static Wedge rindler(int dim) {
        return Wedge(LorentzMap::identity(dim), FourVector::zero(dim), false);
    }

    int dim() const { return boost_.dim(); }
    const LorentzMap& boost() const { return boost_; }
    const FourVector& translation() const { return translation_; }
    bool complemented() const { return complemented_; }

    /// Centered wedge W_c = +-Lambda W_R (translation discarded).
    Wedge centered() const { return Wedge(boost_, FourVector::zero(dim()), complemented_); }

    /// Causal complement: (+-Lambda W_R + a)' = -+Lambda W_R + a.
    Wedge complement() const { return Wedge(boost_, translation_, !complemented_); }

    /// Image under a Poincare transformation (L, t).
    Wedge transformed(const LorentzMap& l, const FourVector& t) const {
        return Wedge(l * boost_, l.apply(translation_) + t, complemented_);
    }

    /// Signed clearance of x from the boundary of the centered wedge W_c:
    /// positive strictly inside. Measured after pulling back to W_R, as
    /// x^1 - |x^0| of the pulled-back point.
    double clearance_centered(const FourVector& x) const {
        FourVector y = boost_.inverse().apply(complemented_ ? -x : x);
        return y[1] - std::abs(y[0]);
    }

    /// Strict membership x in W_c with explicit margin (deterministic at
    /// boundaries).
    bool contains_centered(const FourVector& x, double margin) const {
        return clearance_centered(x) > margin;
    }

private:
    LorentzMap boost_;
    FourVector translation_;
    bool complemented_;
};

/// Warping matrix of a wedge by covariance: Q_W = +-Lambda Q0 Lambda^{-1}.
/// The translation part of W is ignored; the complement flips the sign.
inline WarpingMatrix warping_for_wedge(const Wedge& w, const WarpingMatrix& q0) {
    if (w.dim() != q0.dim()) throw std::invalid_argument("warping_for_wedge: dimension mismatch");
    Eigen::MatrixXd conj =
        w.boost().matrix() * q0.matrix() * w.boost().inverse().matrix();
    if (w.complemented()) conj = -conj;
    return WarpingMatrix(conj, q0.kappa(), q0.eta());
}

}  // namespace wedgescatt
