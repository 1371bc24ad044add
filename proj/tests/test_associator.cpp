#include "fc/associator.hpp"
#include "fc/fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace fc;

namespace {

const size_t U = 0, Y = 1, X = 2;

Gauge random_gauge(std::mt19937_64& rng) {
    auto scalar = [&] {
        static const Cyclotomic pool[] = {
            Cyclotomic(1), Cyclotomic(-1), Cyclotomic(2), Cyclotomic::rational(1, 2),
            Cyclotomic::i(), Cyclotomic::zeta(1), -Cyclotomic::zeta(5),
            Cyclotomic(1) + Cyclotomic::i(), Cyclotomic::rational(-2, 3)};
        return pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
    };
    Gauge g;
    auto put1 = [&](size_t x, size_t y, size_t z) {
        Mat<Cyclotomic> m(1, 1);
        m.at(0, 0) = scalar();
        g.set(x, y, z, m);
    };
    put1(X, Y, X);
    put1(Y, X, X);
    put1(Y, Y, U);
    put1(X, X, U);
    put1(X, X, Y);
    while (true) {
        Mat<Cyclotomic> m(2, 2);
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j) m.at(i, j) = scalar();
        if (!det(m).is_zero()) {
            g.set(X, X, X, m);
            break;
        }
    }
    return g;
}

} // namespace

TEST_CASE("canonical bases reproduce the fixed orderings") {
    FusionRing r = rank3_ring();
    // V^x_{x(xx)}: unit channel, then y, then the four v_i v_j
    HomBasis b = canonical_basis(r, {X, X, X}, X, TreeShape::Right);
    REQUIRE(b.dim() == 6);
    CHECK(b.paths[0] == std::vector<size_t>{U, 0, 0});
    CHECK(b.paths[1] == std::vector<size_t>{Y, 0, 0});
    CHECK(b.paths[2] == std::vector<size_t>{X, 0, 0});
    CHECK(b.paths[3] == std::vector<size_t>{X, 0, 1});
    CHECK(b.paths[4] == std::vector<size_t>{X, 1, 0});
    CHECK(b.paths[5] == std::vector<size_t>{X, 1, 1});

    // V^x_{x(yx)} is two-dimensional over the x channel
    HomBasis c = canonical_basis(r, {X, Y, X}, X, TreeShape::Right);
    REQUIRE(c.dim() == 2);
    CHECK(c.paths[0] == std::vector<size_t>{X, 0, 0});
    CHECK(c.paths[1] == std::vector<size_t>{X, 0, 1});

    CHECK(canonical_basis(r, {Y, Y}, U, TreeShape::Left).dim() == 1);
    CHECK(canonical_basis(r, {X, X, X, X}, X, TreeShape::Left).dim() == 16);
    CHECK(canonical_basis(r, {X, X, X, X}, X, TreeShape::Right).dim() == 16);
    CHECK_THROWS_AS(canonical_basis(r, {X, X, X, X, X}, X, TreeShape::Left),
                    UnsupportedWordLength);
}

TEST_CASE("factor-swap permutations match the fixed matrices") {
    FusionRing r = rank3_ring();
    // tau for P^1_{x,x,x,x} swaps positions 4 and 5
    Mat<Cyclotomic> t1 = tau_matrix(r, X, X, X, X, U);
    REQUIRE(t1.rows() == 6);
    Mat<Cyclotomic> expect1 = Mat<Cyclotomic>::identity(6);
    expect1.at(3, 3) = Cyclotomic(0);
    expect1.at(4, 4) = Cyclotomic(0);
    expect1.at(3, 4) = Cyclotomic(1);
    expect1.at(4, 3) = Cyclotomic(1);
    CHECK(t1 == expect1);

    // tau for P^y_{x,x,x,x} additionally swaps the first two
    Mat<Cyclotomic> t2 = tau_matrix(r, X, X, X, X, Y);
    Mat<Cyclotomic> expect2 = expect1;
    expect2.at(0, 0) = Cyclotomic(0);
    expect2.at(1, 1) = Cyclotomic(0);
    expect2.at(0, 1) = Cyclotomic(1);
    expect2.at(1, 0) = Cyclotomic(1);
    CHECK(t2 == expect2);

    // tau for P^x_{x,y,x,x} is the identity
    CHECK(tau_matrix(r, X, Y, X, X, X).is_identity());

    // every tau is a permutation matrix
    for (size_t x = 0; x < 3; ++x)
        for (size_t y = 0; y < 3; ++y)
            for (size_t z = 0; z < 3; ++z)
                for (size_t w = 0; w < 3; ++w)
                    for (size_t u = 0; u < 3; ++u) {
                        Mat<Cyclotomic> t = tau_matrix(r, x, y, z, w, u);
                        for (size_t i = 0; i < t.rows(); ++i) {
                            int row_ones = 0;
                            for (size_t j = 0; j < t.cols(); ++j) {
                                if (t.at(i, j) == Cyclotomic(1)) ++row_ones;
                                else CHECK(t.at(i, j).is_zero());
                            }
                            CHECK(row_ones == 1);
                        }
                    }
}

TEST_CASE("the explicit rank-3 solution satisfies every pentagon instance") {
    AssociatorSet F = fixtures::rank3_solution();
    F.check_well_formed();
    PentagonReport rep = pentagon_check(F, 2);
    CHECK(rep.ok());
    CHECK(rep.census.nontrivial_by_dim.at(2) == 14);
    CHECK(rep.census.nontrivial_by_dim.at(6) == 6);
    CHECK(rep.census.nontrivial_by_dim.at(16) == 1);
    CHECK(rep.census.onedim_raw == 17);
    // distinct monomial constraints after cancelling common factors
    CHECK(rep.census.onedim_distinct == 13);
}

TEST_CASE("individual instances") {
    AssociatorSet F = fixtures::rank3_solution();
    // P^x_{x,y,y,x} holds; its content is A^2 = Id
    auto sides = pentagon_instance(F.table(), X, Y, Y, X, X);
    CHECK(sides.lhs == sides.rhs);
    Mat<Cyclotomic> A = F.matrix(X, Y, X, X);
    CHECK((A * A).is_identity());
    // instances with a unit label hold trivially, whatever the position
    for (size_t pos = 0; pos < 4; ++pos) {
        size_t labels[4] = {X, X, X, X};
        labels[pos] = U;
        for (size_t u = 0; u < 3; ++u) {
            if (hom_dim(F.ring(), {labels[0], labels[1], labels[2], labels[3]}, u) == 0) continue;
            auto us = pentagon_instance(F.table(), labels[0], labels[1], labels[2], labels[3], u);
            CHECK(us.lhs == us.rhs);
        }
    }
    // the all-unit instance composes to the trivial scalar
    auto all_unit = pentagon_instance(F.table(), U, U, U, U, U);
    CHECK(all_unit.lhs == all_unit.rhs);
    CHECK(all_unit.lhs.is_identity());
}

TEST_CASE("a flipped sign is caught and named") {
    AssociatorSet F = fixtures::rank3_solution();
    Mat<Cyclotomic> flipped(1, 1);
    flipped.at(0, 0) = Cyclotomic(1);  // a^x_{y,x,y} should be -1
    F.set_matrix(Y, X, Y, X, flipped);
    PentagonReport rep = pentagon_check(F);
    CHECK(!rep.ok());
    bool onedim_named = false;
    for (const auto& v : rep.violations)
        if (v.dim == 1) onedim_named = true;
    CHECK(onedim_named);
}

TEST_CASE("rank-1 category passes trivially") {
    AssociatorSet F = fixtures::trivial_solution();
    CHECK(pentagon_check(F).ok());
    CHECK(triangle_check(F).ok());
}

TEST_CASE("triangle coherence") {
    AssociatorSet F = fixtures::rank3_solution();
    CHECK(triangle_check(F).ok());
    // an explicit non-identity unit associator fails
    Mat<Cyclotomic> bad(1, 1);
    bad.at(0, 0) = Cyclotomic(-1);
    F.set_matrix(X, U, X, U, bad);  // a^1_{x,1,x}
    auto rep = triangle_check(F);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].key == AssocKey{X, U, X, U});
}

TEST_CASE("gauge transforms") {
    AssociatorSet F = fixtures::rank3_solution();
    SUBCASE("identity gauge fixes the set") {
        Gauge id;
        AssociatorSet G = gauge_transform(F, id);
        for (const auto& [k, m] : F.stored()) CHECK(G.matrix(k[0], k[1], k[2], k[3]) == m);
    }
    SUBCASE("singular blocks are rejected") {
        Gauge g;
        Mat<Cyclotomic> m(2, 2);
        m.at(0, 0) = Cyclotomic(1);
        g.set(X, X, X, m);
        CHECK_THROWS_AS(gauge_transform(F, g), SingularBlock);
    }
    SUBCASE("random gauges preserve the pentagon property") {
        std::mt19937_64 rng(21);
        for (int iter = 0; iter < 6; ++iter) {
            AssociatorSet G = gauge_transform(F, random_gauge(rng));
            CHECK(pentagon_check(G).ok());
            CHECK(triangle_check(G).ok());
        }
    }
    SUBCASE("swapping the V^x_{xx} basis conjugates a^1_{x,x,x}") {
        Gauge g;
        Mat<Cyclotomic> swap(2, 2);
        swap.at(0, 1) = Cyclotomic(1);
        swap.at(1, 0) = Cyclotomic(1);
        g.set(X, X, X, swap);
        AssociatorSet G = gauge_transform(F, g);
        Mat<Cyclotomic> d0 = F.matrix(X, X, X, U), d1 = G.matrix(X, X, X, U);
        CHECK(d1 == swap * d0 * swap);
        // eigenvalue data (trace, det) unchanged
        CHECK(d0.at(0, 0) + d0.at(1, 1) == d1.at(0, 0) + d1.at(1, 1));
        CHECK(det(d0) == det(d1));
        CHECK(pentagon_check(G).ok());
    }
}

TEST_CASE("the parametric assembly reproduces the explicit matrices") {
    AssociatorSet built = fixtures::solution_from_params(
        Cyclotomic::i(), fixtures::phi_value(), fixtures::d_value(), fixtures::w_value(),
        fixtures::y_value(), fixtures::z_value());
    AssociatorSet app = fixtures::rank3_solution();
    for (const auto& [k, m] : app.stored()) CHECK(built.matrix(k[0], k[1], k[2], k[3]) == m);
}

TEST_CASE("the sixteen-dimensional instance in factored block form") {
    // Build both sides of P^x_{x,x,x,x} from the stored blocks and the fixed
    // permutations tau_3, tau_4, using the interleaved 12x12 carrier of the
    // 6x6 block, and check the equality exactly.
    AssociatorSet F = fixtures::rank3_solution();
    Mat<Cyclotomic> A = F.matrix(X, Y, X, X), B = F.matrix(X, X, Y, X),
                    Fm = F.matrix(Y, X, X, X), D = F.matrix(X, X, X, U),
                    E = F.matrix(X, X, X, Y), Phi = F.matrix(X, X, X, X);

    auto perm = [](size_t a, size_t k) {  // 6x2 -> 12 interleave, 0-based
        if (a < 2) return 2 * a + k;
        return k == 0 ? a + 2 : a + 6;
    };
    Mat<Cyclotomic> phi_tilde(12, 12);
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b)
            for (size_t k = 0; k < 2; ++k) phi_tilde.at(perm(a, k), perm(b, k)) = Phi.at(a, b);

    Mat<Cyclotomic> swap2(2, 2);
    swap2.at(0, 1) = Cyclotomic(1);
    swap2.at(1, 0) = Cyclotomic(1);
    Mat<Cyclotomic> tau3 = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::kron(swap2, Mat<Cyclotomic>::identity(4)),
        Mat<Cyclotomic>::identity(8));
    Mat<Cyclotomic> mid(4, 4);
    mid.at(0, 0) = Cyclotomic(1);
    mid.at(1, 2) = Cyclotomic(1);
    mid.at(2, 1) = Cyclotomic(1);
    mid.at(3, 3) = Cyclotomic(1);
    Mat<Cyclotomic> tau4 = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::kron(swap2, Mat<Cyclotomic>::identity(4)),
        Mat<Cyclotomic>::kron(mid, Mat<Cyclotomic>::identity(2)));

    Mat<Cyclotomic> de_phi = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::direct_sum(D, E), Mat<Cyclotomic>::kron(Phi, Mat<Cyclotomic>::identity(2)));
    Mat<Cyclotomic> i2a = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::direct_sum(Mat<Cyclotomic>::identity(2), A), phi_tilde);
    Mat<Cyclotomic> i2b = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::direct_sum(Mat<Cyclotomic>::identity(2), B), phi_tilde);
    Mat<Cyclotomic> i2f = Mat<Cyclotomic>::direct_sum(
        Mat<Cyclotomic>::direct_sum(Mat<Cyclotomic>::identity(2), Fm), phi_tilde);

    Mat<Cyclotomic> lhs = de_phi * tau3 * i2a * tau3 * de_phi * tau3;
    Mat<Cyclotomic> rhs = tau3 * i2b * tau4 * i2f;
    CHECK(lhs == rhs);
}
