#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wedgescatt/fock_operator.hpp"
#include "wedgescatt/fock_vector.hpp"
#include "wedgescatt/velocity_support.hpp"

namespace wedgescatt {

/// Tuples of modes whose point velocity supports form a strict precursor
/// chain for the wedge and direction (outgoing: velocities decrease along
/// the tuple relative to W). Repeated modes are excluded automatically by
/// strictness. Lexicographic enumeration; identity frame.
inline std::vector<std::vector<int>> ordered_basis(const FockBasis& basis, const Wedge& w,
                                                   OrderingDirection dir, int n,
                                                   double margin = 1e-9) {
    if (n < 0 || n > basis.n_max())
        throw std::invalid_argument("ordered_basis: sector outside truncation");
    const ModeSet& modes = basis.modes();
    const LorentzMap id = LorentzMap::identity(modes.dim());
    std::vector<VelocitySupport> vs;
    vs.reserve(static_cast<std::size_t>(modes.size()));
    for (int i = 0; i < modes.size(); ++i)
        vs.push_back(mode_velocity_support(modes.mass(), modes.momentum(i), id));

    // pair admissibility for consecutive slots (a then b)
    std::vector<std::vector<bool>> ok(static_cast<std::size_t>(modes.size()),
                                      std::vector<bool>(static_cast<std::size_t>(modes.size())));
    for (int a = 0; a < modes.size(); ++a)
        for (int b = 0; b < modes.size(); ++b)
            ok[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                dir == OrderingDirection::outgoing
                    ? precursor(vs[static_cast<std::size_t>(b)].region,
                                vs[static_cast<std::size_t>(a)].region, w, margin)
                    : precursor(vs[static_cast<std::size_t>(a)].region,
                                vs[static_cast<std::size_t>(b)].region, w, margin);

    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        bool good = true;
        for (int a = 0; a + 1 < n && good; ++a)
            good = ok[static_cast<std::size_t>(t[static_cast<std::size_t>(a)])]
                     [static_cast<std::size_t>(t[static_cast<std::size_t>(a) + 1])];
        if (good) out.push_back(t);
        int a = n - 1;
        while (a >= 0 && ++t[static_cast<std::size_t>(a)] == modes.size()) {
            t[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        if (a < 0) break;
    }
    return out;
}

/// All ordered tuples across sectors 0..n_max.
inline std::vector<std::vector<int>> ordered_basis_all(const FockBasis& basis, const Wedge& w,
                                                       OrderingDirection dir,
                                                       double margin = 1e-9) {
    std::vector<std::vector<int>> out;
    for (int n = 0; n <= basis.n_max(); ++n) {
        auto t = ordered_basis(basis, w, dir, n, margin);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

/// sqrt(n!) times the symmetrization of each sector: the isometric embedding
/// of ordered product states into the bosonic space. No domain validation;
/// see embed_ordered for the checked variant.
inline FockVector symmetrize_embed(const FockVector& v) {
    const FockBasis& basis = v.basis();
    FockVector out(v.basis_ptr(), FockRep::bosonic_symmetric);
    out.add_discarded_sq(v.discarded_norm() * v.discarded_norm());
    for (int idx = 0; idx < basis.dim(); ++idx) {
        const std::complex<double> c = v[idx];
        if (c == 0.0) continue;
        const auto t = basis.tuple_of(idx);
        const int n = static_cast<int>(t.size());
        if (n == 0) {
            out[0] += c;
            continue;
        }
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::iota(pos.begin(), pos.end(), 0);
        const std::complex<double> w = c / std::sqrt(std::tgamma(n + 1.0));
        std::vector<int> perm(static_cast<std::size_t>(n));
        do {
            for (int a = 0; a < n; ++a)
                perm[static_cast<std::size_t>(a)] = t[static_cast<std::size_t>(pos[a])];
            out[basis.index_of(perm)] += w;
        } while (std::next_permutation(pos.begin(), pos.end()));
    }
    return out;
}

/// Embedding of a vector supported on ordered tuples; rejects support
/// outside the given ordered basis.
inline FockVector embed_ordered(const FockVector& v,
                                const std::vector<std::vector<int>>& ordered_tuples) {
    const FockBasis& basis = v.basis();
    std::vector<bool> allowed(static_cast<std::size_t>(basis.dim()), false);
    for (const auto& t : ordered_tuples)
        allowed[static_cast<std::size_t>(basis.index_of(t))] = true;
    for (int idx = 0; idx < basis.dim(); ++idx)
        if (!allowed[static_cast<std::size_t>(idx)] && std::abs(v[idx]) > 1e-14)
            throw std::invalid_argument("embed_ordered: support outside the ordered basis");
    return symmetrize_embed(v);
}

/// The embedding as a dense operator: columns over the given tuples carry
/// the embedded basis vectors, all other columns vanish.
inline FockOperator embedding_op(const FockBasisPtr& basis,
                                 const std::vector<std::vector<int>>& ordered_tuples) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis->dim(), basis->dim());
    for (const auto& t : ordered_tuples) {
        FockVector e(basis);
        e[basis->index_of(t)] = 1.0;
        m.col(basis->index_of(t)) = symmetrize_embed(e).amplitudes();
    }
    return FockOperator(basis, std::move(m), true);
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace wedgescatt
