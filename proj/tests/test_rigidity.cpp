#include "fc/pivotal.hpp"
#include "fc/rigidity.hpp"
#include "fc/fixtures.hpp"
#include "fc/pentagon_solver.hpp"

#include <doctest.h>

using namespace fc;

namespace {
const size_t U = 0, Y = 1, X = 2;
}

TEST_CASE("rigidity scalars from the associator corner") {
    AssociatorSet F = fixtures::rank3_solution();
    RigidityStructure R = build_rigidity(F);
    // birth for x is 1/phi = 1 + sqrt3
    CHECK(R.birth[X] == Cyclotomic(1) + Cyclotomic::sqrt3());
    CHECK(R.birth[Y] == Cyclotomic(1));
    CHECK(R.birth[U] == Cyclotomic(1));
    CHECK(R.death[X] == Cyclotomic(1));
}

TEST_CASE("zero corner is rejected") {
    AssociatorSet F = fixtures::rank3_solution();
    // zero out the unit-channel corner of a^x_{x,x,x}
    Mat<Cyclotomic> phi = F.matrix(X, X, X, X);
    phi.at(0, 0) = Cyclotomic(0);
    F.set_matrix(X, X, X, X, phi);
    CHECK_THROWS_AS(build_rigidity(F), ZeroCorner);
}

TEST_CASE("snake scalars are exactly one") {
    AssociatorSet F = fixtures::rank3_solution();
    RigidityStructure R = build_rigidity(F);
    for (auto [right, left] : snake_check(F, R)) {
        CHECK(right == Cyclotomic(1));
        CHECK(left == Cyclotomic(1));
    }
    SUBCASE("doubling the birth doubles both scalars") {
        R.birth[X] = Cyclotomic(2) * R.birth[X];
        auto snakes = snake_check(F, R);
        CHECK(snakes[X].first == Cyclotomic(2));
        CHECK(snakes[X].second == Cyclotomic(2));
    }
}

TEST_CASE("snakes hold on all four classified solutions") {
    AssociatorSet F = fixtures::rank3_solution();
    for (int k : {1, 5, 7, 11}) {
        AssociatorSet img = F.galois(k);
        RigidityStructure R = build_rigidity(img);
        for (auto [right, left] : snake_check(img, R)) {
            CHECK(right == Cyclotomic(1));
            CHECK(left == Cyclotomic(1));
        }
        // birth scalar for x is 1/phi with phi the Galois image corner
        Cyclotomic phi = img.matrix(X, X, X, X).at(0, 0);
        CHECK(R.birth[X] == phi.inverse());
    }
}

TEST_CASE("duals of basis vectors") {
    AssociatorSet F = fixtures::rank3_solution();
    RigidityStructure R = build_rigidity(F);
    // the bend of the death vector v^1_{xx} returns to itself after B^3
    auto dd = double_dual_on_basis(F, R, X, X, U, 0);
    REQUIRE(dd.size() == 1);
    CHECK(dd[0] == Cyclotomic(1));
    // identity-like unit vertex is fixed
    auto du = double_dual_on_basis(F, R, U, U, U, 0);
    CHECK(du[0] == Cyclotomic(1));
    // double dual on V^x_{xy} equals the B^3 scalar, which is 1 here
    auto dxy = double_dual_on_basis(F, R, X, Y, X, 0);
    CHECK(dxy[0] == Cyclotomic(1));
    // single bends match the bending matrix rows
    BendingMatrix B = build_B(F, R);
    auto bent = dual_on_basis(F, R, X, Y, X, 0);
    size_t row = B.position(X, Y, X, 0);
    REQUIRE(bent.size() == 1);
    CHECK(bent[0] == B.mat.at(row, B.position(X, X, Y, 0)));
}

TEST_CASE("pseudo-trace balancing") {
    AssociatorSet F = fixtures::rank3_solution();
    RigidityStructure R = build_rigidity(F);
    SUBCASE("self-dual strands are already balanced") {
        RigidityStructure B = balance_pseudo_traces(F, R);
        for (size_t s = 0; s < 3; ++s) {
            CHECK(B.birth[s] == R.birth[s]);
            auto [pr, pl] = pseudo_traces(B, F.ring(), s);
            CHECK(pr == pl);
            CHECK(!pr.is_zero());
        }
        auto [pr, pl] = pseudo_traces(B, F.ring(), U);
        CHECK(pr == Cyclotomic(1));
        CHECK(pl == Cyclotomic(1));
    }
    SUBCASE("balancing is idempotent and undoes perturbations on dual pairs") {
        // perturb a genuine dual pair in the Z4 pointed category
        AssociatorSet Z4 = fixtures::pointed_cyclic_solution(4);
        RigidityStructure R4 = build_rigidity(Z4);
        RigidityStructure bal = balance_pseudo_traces(Z4, R4);
        RigidityStructure perturbed = bal;
        perturbed.birth[1] = Cyclotomic(2) * perturbed.birth[1];
        perturbed.death[1] = Cyclotomic::rational(1, 2) * perturbed.death[1];
        RigidityStructure rebal = balance_pseudo_traces(Z4, perturbed);
        for (size_t s = 0; s < 4; ++s) {
            auto [pr, pl] = pseudo_traces(rebal, Z4.ring(), s);
            CHECK(pr == pl);
        }
        RigidityStructure again = balance_pseudo_traces(Z4, rebal);
        for (size_t s = 0; s < 4; ++s) {
            CHECK(again.birth[s] == rebal.birth[s]);
            CHECK(again.death[s] == rebal.death[s]);
        }
    }
}

TEST_CASE("quadruple dual after balancing") {
    AssociatorSet F = fixtures::rank3_solution();
    for (int k : {1, 5, 7, 11}) {
        AssociatorSet img = F.galois(k);
        RigidityStructure R = balance_pseudo_traces(img, build_rigidity(img));
        CHECK(quadruple_dual_check(img, R));
    }
    AssociatorSet triv = fixtures::trivial_solution();
    RigidityStructure Rt = balance_pseudo_traces(triv, build_rigidity(triv));
    CHECK(quadruple_dual_check(triv, Rt));
}

TEST_CASE("double dual agrees with the bending matrix cube") {
    AssociatorSet F = fixtures::rank3_solution();
    RigidityStructure R = build_rigidity(F);
    BendingMatrix B = build_B(F, R);
    Mat<Cyclotomic> cube = B.mat * B.mat * B.mat;
    const FusionRing& ring = F.ring();
    for (size_t x = 0; x < 3; ++x)
        for (size_t y = 0; y < 3; ++y)
            for (size_t z = 0; z < 3; ++z)
                for (int i = 0; i < ring.n(x, y, z); ++i) {
                    auto dd = double_dual_on_basis(F, R, x, y, z, i);
                    size_t row = B.position(x, y, z, i);
                    for (int j = 0; j < ring.n(x, y, z); ++j)
                        CHECK(dd[j] == cube.at(row, B.position(x, y, z, j)));
                }
}

TEST_CASE("balancing reports square roots outside the field") {
    AssociatorSet Z4 = fixtures::pointed_cyclic_solution(4);
    RigidityStructure R = build_rigidity(Z4);
    // a zeta-factor perturbation on a non-self-dual strand needs zeta^(1/2)
    R.birth[1] = Cyclotomic::zeta(1) * R.birth[1];
    CHECK_THROWS_AS(balance_pseudo_traces(Z4, R), NoSquareRootInField);
}
