#pragma once

#include "fc/rational.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>

namespace fc {

struct InvalidAutomorphism : std::invalid_argument {
    explicit InvalidAutomorphism(int k)
        : std::invalid_argument("no Galois automorphism sigma_" + std::to_string(k) +
                                ": exponent must be coprime to 12") {}
};

// Element of Q(zeta_12), zeta = e^{i pi/6}, stored as c0 + c1 z + c2 z^2 + c3 z^3
// over the power basis with the reduction z^4 = z^2 - 1. The representation is
// canonical: equality is coefficient-wise equality.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(long long n) { c_[0] = Rational(n); }
    explicit Cyclotomic(Rational r) { c_[0] = std::move(r); }
    Cyclotomic(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclotomic zero() { return Cyclotomic(); }
    static Cyclotomic one() { return Cyclotomic(1); }
    // zeta^k for any integer k (reduced mod 12).
    static Cyclotomic zeta(int k);
    static Cyclotomic i() { return zeta(3); }
    static Cyclotomic sqrt3() { return zeta(1) * Cyclotomic(2) - zeta(3); }
    static Cyclotomic rational(long long p, long long q) { return Cyclotomic(Rational(p, q)); }

    const Rational& coeff(int k) const { return c_[k]; }
    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;

    Cyclotomic& operator+=(const Cyclotomic& b) { *this = *this + b; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& b) { *this = *this - b; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Total order on representations (coefficient lex); used for canonical sorting only.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) < 0; }

    // Multiplicative inverse via the 4x4 rational linear system for the
    // multiplication-by-*this matrix. Throws DivisionByZero on zero.
    Cyclotomic inverse() const;

    // Galois automorphism sigma_k : zeta -> zeta^k, k in {1,5,7,11}.
    Cyclotomic galois(int k) const;
    Cyclotomic conj() const { return galois(11); }

    // Numeric embedding (diagnostics only; never on a correctness path).
    std::complex<double> embed() const;

    std::string to_string() const;

private:
    std::array<Rational, 4> c_{};
};

// Attempts to find the unique field element with small coefficients close to z:
// every coefficient denominator must divide out to <= den_bound and numerators
// must stay within a magnitude cap. Candidates are ranked by height; the result
// is only a candidate and callers re-verify exactly.
std::optional<Cyclotomic> recognize(std::complex<double> z, long long den_bound);

// Exact square root in Q(zeta_12) when one exists (found numerically, then
// verified exactly).
std::optional<Cyclotomic> try_sqrt(const Cyclotomic& a);

} // namespace fc
