#include "fc/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using fc::Cyclotomic;
using fc::Rational;

namespace {

Cyclotomic random_elem(std::mt19937_64& rng, int num_bound, int den_bound) {
    auto coeff = [&] {
        long long n = static_cast<long long>(rng() % (2 * num_bound + 1)) - num_bound;
        long long d = 1 + static_cast<long long>(rng() % den_bound);
        return Rational(n, d);
    };
    return Cyclotomic(coeff(), coeff(), coeff(), coeff());
}

} // namespace

TEST_CASE("root of unity identities") {
    Cyclotomic z = Cyclotomic::zeta(1);
    CHECK(Cyclotomic::zeta(3) * Cyclotomic::zeta(3) == Cyclotomic(-1));  // zeta^6 = -1
    CHECK(Cyclotomic::sqrt3() * Cyclotomic::sqrt3() == Cyclotomic(3));
    Cyclotomic z12(1);
    for (int i = 0; i < 12; ++i) z12 = z12 * z;
    CHECK(z12 == Cyclotomic(1));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        Cyclotomic a = random_elem(rng, 6, 4), b = random_elem(rng, 6, 4), c = random_elem(rng, 6, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    }
}

TEST_CASE("inverse examples") {
    CHECK(Cyclotomic(1).inverse() == Cyclotomic(1));
    // zeta^-1 = zeta^11 = zeta - zeta^3
    Cyclotomic z = Cyclotomic::zeta(1);
    CHECK(z.inverse() == Cyclotomic::zeta(11));
    CHECK(z.inverse() * z == Cyclotomic(1));
    // phi = (-1+sqrt3)/2 has inverse 1+sqrt3
    Cyclotomic phi = (Cyclotomic(-1) + Cyclotomic::sqrt3()) * Cyclotomic::rational(1, 2);
    Cyclotomic expected = Cyclotomic(1) + Cyclotomic::sqrt3();
    CHECK(phi.inverse() == expected);
    CHECK(phi * expected == Cyclotomic(1));
    CHECK_THROWS_AS(Cyclotomic().inverse(), fc::DivisionByZero);
}

TEST_CASE("galois automorphisms") {
    Cyclotomic i = Cyclotomic::i(), s3 = Cyclotomic::sqrt3();
    CHECK(i.galois(11) == -i);        // complex conjugation
    CHECK(s3.galois(5) == -s3);
    CHECK(i.galois(5) == i);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        Cyclotomic a = random_elem(rng, 5, 3);
        CHECK(a.galois(1) == a);
        CHECK(a.galois(11).galois(11) == a);
        for (int k : {1, 5, 7, 11})
            for (int m : {1, 5, 7, 11}) CHECK(a.galois(k).galois(m) == a.galois(k * m % 12));
    }
    // the four automorphisms are ring homomorphisms
    for (int k : {1, 5, 7, 11}) {
        Cyclotomic a = random_elem(rng, 5, 3), b = random_elem(rng, 5, 3);
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
        CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
    CHECK_THROWS_AS(Cyclotomic(1).galois(2), fc::InvalidAutomorphism);
    CHECK_THROWS_AS(Cyclotomic(1).galois(6), fc::InvalidAutomorphism);
}

TEST_CASE("numeric embedding") {
    auto z = Cyclotomic::zeta(1).embed();
    CHECK(std::abs(z.real() - 0.8660254037844386) < 1e-12);
    CHECK(std::abs(z.imag() - 0.5) < 1e-12);
    Cyclotomic phi = (Cyclotomic(-1) + Cyclotomic::sqrt3()) * Cyclotomic::rational(1, 2);
    CHECK(std::abs(phi.embed().real() - 0.36602540378443865) < 1e-12);
    CHECK(std::abs(phi.embed().imag()) < 1e-15);
    CHECK(std::abs(Cyclotomic().embed()) == 0.0);

    // ring homomorphism numerically
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 100; ++iter) {
        Cyclotomic a = random_elem(rng, 10, 10), b = random_elem(rng, 10, 10);
        CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10);
        CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-10);
    }
}

TEST_CASE("recognition of exact values") {
    // zeta^2 = (1 + i sqrt3)/2
    auto r1 = fc::recognize({0.5, 0.8660254037844386}, 2);
    REQUIRE(r1.has_value());
    CHECK(*r1 == Cyclotomic::zeta(2));

    // (1/sqrt2) e^{7 pi i/12} = (-z + z^2 + z^3)/2
    auto r2 = fc::recognize({-0.18301270189221932, 0.6830127018922193}, 2);
    REQUIRE(r2.has_value());
    Cyclotomic d = (-Cyclotomic::zeta(1) + Cyclotomic::zeta(2) + Cyclotomic::zeta(3)) *
                   Cyclotomic::rational(1, 2);
    CHECK(*r2 == d);
    // confirm exactly: square must equal (1/2) e^{7 pi i/6} = zeta^7 / 2
    CHECK(*r2 * *r2 == Cyclotomic::zeta(7) * Cyclotomic::rational(1, 2));

    // transcendental input finds nothing
    auto r3 = fc::recognize({3.141592653589793, 0.0}, 1000);
    CHECK(!r3.has_value());
}

TEST_CASE("recognition round trip at small height") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 60; ++iter) {
        Cyclotomic a = random_elem(rng, 6, 12);
        auto back = fc::recognize(a.embed(), 12);
        REQUIRE(back.has_value());
        CHECK(*back == a);
    }
}

TEST_CASE("exact square roots") {
    auto r = fc::try_sqrt(Cyclotomic(-1));
    REQUIRE(r.has_value());
    CHECK(*r * *r == Cyclotomic(-1));
    auto r3 = fc::try_sqrt(Cyclotomic(3));
    REQUIRE(r3.has_value());
    CHECK(*r3 * *r3 == Cyclotomic(3));
    CHECK(!fc::try_sqrt(Cyclotomic(5)).has_value());
}
