#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "wedgescatt/fock_basis.hpp"
#include "wedgescatt/fock_operator.hpp"
#include "wedgescatt/fock_vector.hpp"
#include "wedgescatt/ordered_fock.hpp"
#include "wedgescatt/spectral.hpp"

using namespace wedgescatt;
using std::complex;

namespace {

FockBasisPtr small_basis(int n_max = 3) {
    return make_basis(ModeSet(2, 1.0, {{-0.9}, {-0.3}, {0.4}, {1.1}}), n_max);
}

FockVector random_state(const FockBasisPtr& b, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    FockVector v(b);
    for (int i = 0; i < b->dim(); ++i) v[i] = complex<double>(g(rng), g(rng));
    return v;
}

}  // namespace

TEST_CASE("mode set validation") {
    REQUIRE_THROWS_AS(ModeSet(2, 1.0, {{0.1}, {0.1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ModeSet(2, 0.0, {{0.1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ModeSet(2, 1.0, {{0.1, 0.2}}), std::invalid_argument);
    const ModeSet m(3, 0.5, {{0.1, 0.0}, {0.0, 0.2}});
    for (int i = 0; i < m.size(); ++i) {
        const FourVector k = m.onshell(i);
        REQUIRE(std::abs(minkowski_dot(k, k) - 0.25) <= 1e-12);
    }
}

TEST_CASE("basis indexing round trip") {
    const auto b = small_basis(3);
    REQUIRE(b->dim() == 1 + 4 + 16 + 64);
    REQUIRE(b->sector_dim(2) == 16);
    for (int idx = 0; idx < b->dim(); ++idx) {
        const auto t = b->tuple_of(idx);
        REQUIRE(b->index_of(t) == idx);
        REQUIRE(static_cast<int>(t.size()) == b->sector_of(idx));
    }
    // eigenvalue of a two-particle tuple is the sum of on-shell vectors
    const int idx = b->index_of(std::vector<int>{1, 3});
    const FourVector expect = b->modes().onshell(1) + b->modes().onshell(3);
    REQUIRE((b->eigenvalue(idx) - expect).euclidean_norm() == 0.0);
}

TEST_CASE("creation and annihilation") {
    const auto b = small_basis(3);
    const FockVector vac = FockVector::vacuum(b);

    SECTION("annihilation kills the vacuum") {
        REQUIRE(annihilate_op(b, 2).apply(vac).norm() == 0.0);
    }
    SECTION("normalization <O, a a* O> = 1") {
        const FockVector one = create_op(b, 1).apply(vac);
        REQUIRE(one.norm() == Catch::Approx(1.0).margin(1e-14));
        REQUIRE(std::abs(inner(vac, annihilate_op(b, 1).apply(one)) - 1.0) <= 1e-14);
    }
    SECTION("sqrt occupation ladder") {
        FockVector v = vac;
        const FockOperator ad = create_op(b, 0);
        v = ad.apply(v);
        v = ad.apply(v);
        v = ad.apply(v);
        // a*^3 O has norm sqrt(3!)
        REQUIRE(v.norm() == Catch::Approx(std::sqrt(6.0)).margin(1e-13));
        REQUIRE(v.symmetry_defect() <= 1e-14);
    }
    SECTION("CCR on the symmetric subspace below the truncation") {
        const FockOperator sym = symmetrizer_op(b);
        for (int i : {0, 2})
            for (int j : {0, 2, 3}) {
                const FockOperator comm = annihilate_op(b, i) * create_op(b, j) -
                                          create_op(b, j) * annihilate_op(b, i);
                Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(b->dim(), b->dim());
                if (i == j)
                    for (int idx = 0; idx < b->sector_offset(b->n_max()); ++idx)
                        expect(idx, idx) = 1.0;
                const Eigen::MatrixXcd lhs =
                    (sym.matrix() * comm.matrix() * sym.matrix() - sym.matrix() * expect * sym.matrix());
                // restrict to sectors n <= n_max - 1
                const int cut = b->sector_offset(b->n_max());
                REQUIRE(lhs.topLeftCorner(cut, cut).cwiseAbs().maxCoeff() <= 1e-12);
            }
    }
    SECTION("truncation overflow goes to the discarded counter") {
        // fill the top sector with a pure mode-0 state: a*(0) discards sqrt(N+1)
        FockVector top(b);
        top[b->index_of(std::vector<int>{0, 0, 0})] = 1.0;
        const FockVector out = create_op(b, 0).apply(top);
        REQUIRE(out.norm() == 0.0);
        REQUIRE(out.discarded_norm() == Catch::Approx(2.0).margin(1e-13));  // sqrt(4)
    }
    SECTION("non-ladder operators refuse silent truncation") {
        std::mt19937_64 rng(3);
        FockVector top(b);
        top[b->index_of(std::vector<int>{0, 1, 2})] = 1.0;
        const FockOperator weird = create_op(b, 0) + create_op(b, 1);
        REQUIRE_THROWS_AS(weird.apply(top), std::runtime_error);
    }
}

TEST_CASE("translations") {
    const auto b = small_basis(2);
    const FockVector vac = FockVector::vacuum(b);

    SECTION("U(0) is the identity and fixes the vacuum") {
        const FockOperator u0 = translate_op(b, FourVector{0.0, 0.0});
        REQUIRE(u0.max_abs_difference(identity_op(b)) == 0.0);
        REQUIRE((translate_op(b, FourVector{1.3, -0.4}).apply(vac) - vac).norm() == 0.0);
    }
    SECTION("covariant conjugation of creation operators") {
        const FourVector x{0.7, -1.1};
        const FockOperator u = translate_op(b, x);
        for (int i = 0; i < b->modes().size(); ++i) {
            const FockOperator lhs = u * create_op(b, i) * u.adjoint();
            const complex<double> phase =
                std::polar(1.0, minkowski_dot(x, b->modes().onshell(i)));
            const FockOperator rhs = phase * create_op(b, i);
            REQUIRE(lhs.max_abs_difference(rhs) <= 1e-14);
        }
    }
    SECTION("unitary representation U(x)U(y) = U(x+y)") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (int trial = 0; trial < 25; ++trial) {
            const FourVector x{u(rng), u(rng)}, y{u(rng), u(rng)};
            const FockOperator lhs = translate_op(b, x) * translate_op(b, y);
            REQUIRE(lhs.max_abs_difference(translate_op(b, x + y)) <= 1e-12);
        }
    }
}

TEST_CASE("slot momentum operators") {
    const auto b = small_basis(3);

    SECTION("P_1 multiplies one-particle modes by khat") {
        for (int i = 0; i < b->modes().size(); ++i) {
            FockVector e(b);
            e[b->index_of(std::vector<int>{i})] = 1.0;
            for (int mu = 0; mu < 2; ++mu) {
                const FockVector out = slot_momentum_op(b, 0, mu).apply(e);
                REQUIRE(std::abs(inner(e, out) - b->modes().onshell(i)[mu]) <= 1e-14);
            }
        }
    }
    SECTION("P_2 annihilates one-particle states") {
        FockVector e(b);
        e[b->index_of(std::vector<int>{1})] = 1.0;
        REQUIRE(slot_momentum_op(b, 1, 0).apply(e).norm() == 0.0);
    }
    SECTION("slot operators sum to the full energy-momentum") {
        for (int mu = 0; mu < 2; ++mu) {
            Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(b->dim(), b->dim());
            for (int slot = 0; slot < b->n_max(); ++slot)
                total += slot_momentum_op(b, slot, mu).matrix();
            for (int idx = 0; idx < b->dim(); ++idx)
                REQUIRE(std::abs(total(idx, idx) - b->eigenvalue(idx)[mu]) <= 1e-13);
        }
    }
    SECTION("slot operators commute") {
        for (int mu = 0; mu < 2; ++mu)
            for (int nu = 0; nu < 2; ++nu) {
                const FockOperator a = slot_momentum_op(b, 0, mu);
                const FockOperator c = slot_momentum_op(b, 2, nu);
                REQUIRE((a * c - c * a).max_abs_difference(
                            FockOperator(b, Eigen::MatrixXcd::Zero(b->dim(), b->dim()))) == 0.0);
            }
    }
}

TEST_CASE("ordered bases") {
    const auto b = small_basis(3);
    const Wedge w = Wedge::rindler(2);

    SECTION("one-particle sector is unconstrained") {
        REQUIRE(ordered_basis(*b, w, OrderingDirection::outgoing, 1).size() == 4);
        REQUIRE(ordered_basis(*b, w, OrderingDirection::incoming, 1).size() == 4);
    }
    SECTION("two modes order as (fast, slow) outgoing") {
        const auto bb = make_basis(ModeSet(2, 1.0, {{0.1 / std::sqrt(1.0 - 0.01)},
                                                    {0.5 / std::sqrt(1.0 - 0.25)}}),
                                   2);
        // mode velocities are 0.1 and 0.5
        const auto out2 = ordered_basis(*bb, w, OrderingDirection::outgoing, 2);
        REQUIRE(out2.size() == 1);
        REQUIRE(out2[0] == std::vector<int>{1, 0});
        const auto in2 = ordered_basis(*bb, w, OrderingDirection::incoming, 2);
        REQUIRE(in2.size() == 1);
        REQUIRE(in2[0] == std::vector<int>{0, 1});
    }
    SECTION("repeated modes are excluded") {
        for (const auto& t : ordered_basis(*b, w, OrderingDirection::outgoing, 3))
            for (std::size_t a = 0; a < t.size(); ++a)
                for (std::size_t c = a + 1; c < t.size(); ++c) REQUIRE(t[a] != t[c]);
    }
    SECTION("counts match distinct subsets for totally ordered velocities") {
        for (int n = 1; n <= 3; ++n)
            REQUIRE(static_cast<long long>(
                        ordered_basis(*b, w, OrderingDirection::outgoing, n).size()) ==
                    binomial(b->modes().size(), n));
    }
    SECTION("reversal maps the W out-basis onto the W' out-basis") {
        for (int n = 1; n <= 3; ++n) {
            auto lhs = ordered_basis(*b, w, OrderingDirection::outgoing, n);
            auto rhs = ordered_basis(*b, w.complement(), OrderingDirection::outgoing, n);
            for (auto& t : lhs) std::reverse(t.begin(), t.end());
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("ordered embeddings") {
    const auto b = small_basis(3);
    const Wedge w = Wedge::rindler(2);
    const auto out_tuples = ordered_basis_all(*b, w, OrderingDirection::outgoing);

    SECTION("one-particle states are unchanged") {
        FockVector e(b);
        e[b->index_of(std::vector<int>{2})] = 1.0;
        REQUIRE((embed_ordered(e, out_tuples) - e).norm() <= 1e-15);
    }
    SECTION("ordered pairs embed to unit-norm symmetric states") {
        const auto pair_tuples = ordered_basis(*b, w, OrderingDirection::outgoing, 2);
        for (const auto& t : pair_tuples) {
            FockVector e(b);
            e[b->index_of(t)] = 1.0;
            const FockVector s = embed_ordered(e, out_tuples);
            REQUIRE(s.norm() == Catch::Approx(1.0).margin(1e-13));
            REQUIRE(s.symmetry_defect() <= 1e-14);
        }
    }
    SECTION("embedding is an isometry on the ordered span") {
        std::mt19937_64 rng(29);
        std::normal_distribution<double> g;
        for (int trial = 0; trial < 20; ++trial) {
            FockVector u(b), v(b);
            for (const auto& t : out_tuples) {
                u[b->index_of(t)] = complex<double>(g(rng), g(rng));
                v[b->index_of(t)] = complex<double>(g(rng), g(rng));
            }
            REQUIRE(std::abs(inner(embed_ordered(u, out_tuples), embed_ordered(v, out_tuples)) -
                             inner(u, v)) <= 1e-12 * u.norm() * v.norm());
        }
    }
    SECTION("scalar products of embedded products factor per slot") {
        // two ordered 3-tuples with matching slots: <I psi, I psi'> = prod <psi_k, psi_k'>
        std::mt19937_64 rng(31);
        std::normal_distribution<double> g;
        const std::vector<int> t{3, 2, 1};  // velocities decrease: outgoing ordered
        complex<double> prod = 1.0;
        FockVector u(b), v(b);
        u[b->index_of(t)] = 1.0;
        complex<double> c = complex<double>(g(rng), g(rng));
        v[b->index_of(t)] = c;
        prod = std::conj(complex<double>(1.0)) * c;
        REQUIRE(std::abs(inner(embed_ordered(u, out_tuples), embed_ordered(v, out_tuples)) -
                         prod) <= 1e-13);
        // orthogonal slots give zero
        FockVector z(b);
        z[b->index_of(std::vector<int>{3, 2, 0})] = 1.0;
        REQUIRE(std::abs(inner(embed_ordered(u, out_tuples), embed_ordered(z, out_tuples))) <=
                1e-13);
    }
    SECTION("support off the ordered basis is rejected") {
        FockVector bad(b);
        bad[b->index_of(std::vector<int>{0, 0})] = 1.0;
        REQUIRE_THROWS_AS(embed_ordered(bad, out_tuples), std::invalid_argument);
    }
    SECTION("embedding operator has full rank on the ordered span") {
        const FockOperator emb = embedding_op(b, out_tuples);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(emb.matrix());
        qr.setThreshold(1e-10);
        REQUIRE(qr.rank() == static_cast<Eigen::Index>(out_tuples.size()));
    }
}

TEST_CASE("reversal Z") {
    const auto b = small_basis(3);
    const FockOperator z = reversal_op(b);

    SECTION("identity on vacuum and one-particle states") {
        const int cut = b->sector_offset(2);
        REQUIRE((z.matrix().topLeftCorner(cut, cut) -
                 Eigen::MatrixXcd::Identity(cut, cut))
                    .cwiseAbs()
                    .maxCoeff() == 0.0);
    }
    SECTION("involution and unitarity") {
        REQUIRE((z * z).max_abs_difference(identity_op(b)) == 0.0);
        REQUIRE((z.adjoint() * z).max_abs_difference(identity_op(b)) == 0.0);
    }
    SECTION("Z acts on tuples by reversal") {
        FockVector e(b);
        e[b->index_of(std::vector<int>{0, 1, 3})] = 1.0;
        const FockVector ze = z.apply(e);
        REQUIRE(std::abs(ze[b->index_of(std::vector<int>{3, 1, 0})] - 1.0) == 0.0);
    }
}

TEST_CASE("spectral decomposition") {
    const auto b = small_basis(3);
    const SpectralDecomposition spec(b);

    SECTION("projections are complete and orthogonal") {
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(b->dim(), b->dim());
        for (int g = 0; g < spec.group_count(); ++g) sum += spec.projector(g).matrix();
        REQUIRE((sum - Eigen::MatrixXcd::Identity(b->dim(), b->dim())).cwiseAbs().maxCoeff() ==
                0.0);
        // disjoint index sets imply orthogonality; spot-check a few products
        for (int g = 0; g + 1 < std::min(6, spec.group_count()); ++g)
            REQUIRE((spec.projector(g) * spec.projector(g + 1))
                        .matrix()
                        .cwiseAbs()
                        .maxCoeff() == 0.0);
    }
    SECTION("eigenvalues lie in the forward cone") {
        REQUIRE(spec.forward_cone_defect() <= 0.0);
    }
    SECTION("permuted tuples share a group") {
        REQUIRE(spec.group_of(b->index_of(std::vector<int>{1, 3})) ==
                spec.group_of(b->index_of(std::vector<int>{3, 1})));
        REQUIRE(spec.group_of(b->index_of(std::vector<int>{1, 3})) !=
                spec.group_of(b->index_of(std::vector<int>{1, 2})));
    }
}

TEST_CASE("mode permutations from Lorentz maps") {
    // modes symmetric under the spatial pi-rotation in d = 3
    const ModeSet m(3, 1.0, {{0.4, 0.0}, {-0.4, 0.0}, {0.0, 0.7}, {0.0, -0.7}});
    const LorentzMap rot = LorentzMap::rotation(3, 1, 2, std::acos(-1.0));
    const auto perm = lorentz_mode_permutation(m, rot);
    REQUIRE(perm.has_value());
    REQUIRE((*perm)[0] == 1);
    REQUIRE((*perm)[1] == 0);
    REQUIRE((*perm)[2] == 3);
    REQUIRE((*perm)[3] == 2);
    // a generic boost does not permute the set
    REQUIRE_FALSE(lorentz_mode_permutation(m, LorentzMap::boost(3, 1, 0.3)).has_value());

    const auto b = make_basis(m, 2);
    const FockOperator u = mode_permutation_op(b, *perm);
    REQUIRE((u.adjoint() * u).max_abs_difference(identity_op(b)) == 0.0);
    // conjugation maps ladders onto permuted ladders
    REQUIRE((u * create_op(b, 0) * u.adjoint()).max_abs_difference(create_op(b, 1)) <= 1e-14);
}
