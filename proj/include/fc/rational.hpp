#pragma once

#include "fc/bigint.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace fc {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Exact rational, always stored reduced with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    static int compare(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // "p/q" in lowest terms, q > 0 (q printed even when 1).
    std::string to_string() const;
    // Parses "p/q"; requires q > 0 and gcd(|p|,q) = 1, else throws.
    static Rational parse_canonical(std::string_view s);

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

} // namespace fc
