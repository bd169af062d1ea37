#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "wedgescatt/fock_operator.hpp"
#include "wedgescatt/profile.hpp"
#include "wedgescatt/spectral.hpp"
#include "wedgescatt/warping.hpp"

namespace wedgescatt {

/// alpha_y(A) = U(y) A U(y)^*.
inline FockOperator translate_conjugate(const FockOperator& a, const FourVector& y) {
    const FockOperator u = translate_op(a.basis_ptr(), y);
    return u * a * u.adjoint();
}

/// Warped convolution on the discrete spectrum: the spectral sum
/// sum_p alpha_{Qp}(A) E(p) is exact here, and on matrix elements it is the
/// phase <Q p_in, p_out - p_in> on each block. Both the phase form and the
/// grouped left/right spectral sums are computed and cross-checked.
inline FockOperator warp(const FockOperator& a, const WarpingMatrix& q) {
    const FockBasisPtr& basis = a.basis_ptr();
    if (q.dim() != basis->modes().dim())
        throw std::invalid_argument("warp: warping matrix dimension mismatch");
    const int dim = basis->dim();

    Eigen::MatrixXcd phase_form(dim, dim);
    for (int c = 0; c < dim; ++c) {
        const FourVector qp = q.apply(basis->eigenvalue(c));
        for (int r = 0; r < dim; ++r) {
            if (a.matrix()(r, c) == 0.0) {
                phase_form(r, c) = 0.0;
                continue;
            }
            const double ph = minkowski_dot(qp, basis->eigenvalue(r) - basis->eigenvalue(c));
            phase_form(r, c) = a.matrix()(r, c) * std::polar(1.0, ph);
        }
    }

    // grouped spectral sums, right (E on the right) and left (E on the left)
    const SpectralDecomposition spec(basis);
    Eigen::MatrixXcd right(dim, dim), left(dim, dim);
    std::vector<std::complex<double>> diag(static_cast<std::size_t>(dim));
    for (int g = 0; g < spec.group_count(); ++g) {
        const FourVector y = q.apply(spec.group_eigenvalue(g));
        for (int i = 0; i < dim; ++i)
            diag[static_cast<std::size_t>(i)] =
                std::polar(1.0, minkowski_dot(y, basis->eigenvalue(i)));
        for (int c : spec.group_members(g)) {
            const std::complex<double> uc = std::conj(diag[static_cast<std::size_t>(c)]);
            for (int r = 0; r < dim; ++r)
                right(r, c) = diag[static_cast<std::size_t>(r)] * a.matrix()(r, c) * uc;
        }
        for (int r : spec.group_members(g)) {
            const std::complex<double> ur = diag[static_cast<std::size_t>(r)];
            for (int c = 0; c < dim; ++c)
                left(r, c) = ur * a.matrix()(r, c) * std::conj(diag[static_cast<std::size_t>(c)]);
        }
    }
    const double scale = 1.0 + a.matrix().cwiseAbs().maxCoeff();
    if ((right - phase_form).cwiseAbs().maxCoeff() > 1e-12 * scale ||
        (left - phase_form).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::runtime_error("warp: spectral-sum forms disagree with the phase form");

    return FockOperator(basis, std::move(phase_form), a.preserves_symmetry());
}

/// Residuals of the warped-convolution identities, one entry per item.
struct WarpPropertyReport {
    double vacuum = 0.0;        // A_Q vacuum = A vacuum
    double adjoint = 0.0;       // (A_Q)^* = (A^*)_Q
    double zero_warping = 0.0;  // A_0 = A
    double translation = 0.0;   // alpha_x(A_Q) = (alpha_x A)_Q
    double boost_operator = 0.0;  // alpha_L(A_Q) = (alpha_L A)_{LQL^{-1}}, implementable L
    double boost_phase = 0.0;     // the same identity at the level of spectral phases

    double max_residual() const {
        return std::max({vacuum, adjoint, zero_warping, translation, boost_operator,
                         boost_phase});
    }
};

/// Checks items (i), (ii), (iii), (v), (vi) of the warped-convolution lemma
/// for a concrete operator. Boost covariance (vi) runs at operator level for
/// every supplied Lorentz map that permutes the mode set, and as a phase
/// identity over random boosts otherwise.
inline WarpPropertyReport verify_warp_properties(
    const FockOperator& a, const WarpingMatrix& q,
    const std::vector<LorentzMap>& boosts = {}, std::uint64_t seed = 1) {
    const FockBasisPtr& basis = a.basis_ptr();
    const int d = basis->modes().dim();
    WarpPropertyReport rep;
    const FockOperator aq = warp(a, q);

    const FockVector vac = FockVector::vacuum(basis);
    rep.vacuum = (aq.apply(vac) - a.apply(vac)).norm();

    rep.adjoint = aq.adjoint().max_abs_difference(warp(a.adjoint(), q));

    const WarpingMatrix zero(Eigen::MatrixXd::Zero(d, d), 0.0,
                             d == 4 ? std::optional<double>(0.0) : std::nullopt);
    rep.zero_warping = warp(a, zero).max_abs_difference(a);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        FourVector x(d);
        for (int mu = 0; mu < d; ++mu) x[mu] = u(rng);
        rep.translation = std::max(
            rep.translation,
            translate_conjugate(aq, x).max_abs_difference(warp(translate_conjugate(a, x), q)));
    }

    for (const auto& l : boosts) {
        const WarpingMatrix ql(l.matrix() * q.matrix() * l.inverse().matrix(), q.kappa(),
                               q.eta());
        if (const auto perm = lorentz_mode_permutation(basis->modes(), l)) {
            const FockOperator ul = mode_permutation_op(basis, *perm);
            const FockOperator lhs = ul * aq * ul.adjoint();
            const FockOperator rhs = warp(ul * a * ul.adjoint(), ql);
            rep.boost_operator = std::max(rep.boost_operator, lhs.max_abs_difference(rhs));
        }
        // phase identity <L Q L^{-1} (L p), (L r)> = <Q p, r> over the spectrum
        for (int trial = 0; trial < 16; ++trial) {
            const FourVector p = basis->eigenvalue(rng() % basis->dim());
            const FourVector r = basis->eigenvalue(rng() % basis->dim());
            const double lhs = minkowski_dot(ql.apply(l.apply(p)), l.apply(r));
            const double rhs = minkowski_dot(q.apply(p), r);
            rep.boost_phase = std::max(rep.boost_phase, std::abs(lhs - rhs));
        }
    }
    return rep;
}

/// Smearing by an auxiliary function through its Fourier transform: each
/// block picks up (2 pi)^{d/2} chi_hat(p_out - p_in).
inline FockOperator smear(const FockOperator& a,
                          const std::function<std::complex<double>(const FourVector&)>& chi_hat) {
    const FockBasisPtr& basis = a.basis_ptr();
    const int dim = basis->dim();
    const double norm = std::pow(2.0 * std::numbers::pi, basis->modes().dim() / 2.0);
    Eigen::MatrixXcd m(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r)
            m(r, c) = a.matrix()(r, c) == 0.0
                          ? std::complex<double>(0.0)
                          : a.matrix()(r, c) * norm *
                                chi_hat(basis->eigenvalue(r) - basis->eigenvalue(c));
    return FockOperator(basis, std::move(m), a.preserves_symmetry());
}

/// chi_hat supported on the positive mass shell only: value
/// (2 pi)^{-d/2} sigma(transfer) when the transfer matches +khat_j for some
/// mode j, zero otherwise. The default profile sigma = 1 makes smearing act
/// as the identity on single-creation blocks.
inline std::function<std::complex<double>(const FourVector&)> onshell_chi(
    const ModeSet& modes,
    std::function<std::complex<double>(const FourVector&)> sigma = {}, double tol = 1e-9) {
    const double norm = std::pow(2.0 * std::numbers::pi, -modes.dim() / 2.0);
    std::vector<FourVector> shell;
    shell.reserve(static_cast<std::size_t>(modes.size()));
    for (int j = 0; j < modes.size(); ++j) shell.push_back(modes.onshell(j));
    return [norm, shell, sigma, tol](const FourVector& dp) -> std::complex<double> {
        for (const auto& khat : shell)
            if ((dp - khat).euclidean_norm() <= tol)
                return sigma ? norm * sigma(dp) : std::complex<double>(norm);
        return 0.0;
    };
}

/// Haag-Ruelle creation-operator approximant B_tau(f): each block is
/// weighted by ftilde at the spatial transfer and the phase
/// e^{i (dp^0 - omega_m(dp)) tau}. Only the identity auxiliary frame is
/// supported; tilted frames do not close over a fixed mode lattice.
inline FockOperator haag_ruelle(const FockOperator& b, const KGSolution& f, double tau,
                                const LorentzMap& frame) {
    const FockBasisPtr& basis = b.basis_ptr();
    const int d = basis->modes().dim();
    if ((frame.matrix() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 0.0)
        throw std::invalid_argument("haag_ruelle: only the identity frame is supported");
    if (f.spatial_dim() != d - 1)
        throw std::invalid_argument("haag_ruelle: packet dimension mismatch");
    const double mass = basis->modes().mass();
    const int dim = basis->dim();
    Eigen::MatrixXcd m(dim, dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) {
            if (b.matrix()(r, c) == 0.0) {
                m(r, c) = 0.0;
                continue;
            }
            const FourVector dp = basis->eigenvalue(r) - basis->eigenvalue(c);
            const std::vector<double> dk = dp.spatial();
            m(r, c) = b.matrix()(r, c) * f.profile.amplitude(dk) *
                      std::polar(1.0, (dp[0] - dispersion(mass, dk)) * tau);
        }
    return FockOperator(basis, std::move(m), b.preserves_symmetry());
}

/// Hermitian field-type operator sum_j (c_j a*(j) + conj(c_j) a(j)).
inline FockOperator field_op(const FockBasisPtr& basis,
                             const std::vector<std::complex<double>>& coeffs) {
    if (static_cast<int>(coeffs.size()) != basis->modes().size())
        throw std::invalid_argument("field_op: coefficient count mismatch");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (int j = 0; j < basis->modes().size(); ++j) {
        if (coeffs[static_cast<std::size_t>(j)] == 0.0) continue;
        const FockOperator ad = create_op(basis, j);
        m += coeffs[static_cast<std::size_t>(j)] * ad.matrix() +
             std::conj(coeffs[static_cast<std::size_t>(j)]) * ad.matrix().adjoint();
    }
    return FockOperator(basis, std::move(m), true);
}

}  // namespace wedgescatt
