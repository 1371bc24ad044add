#include "fc/rational.hpp"

namespace fc {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(den_, num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::parse_canonical(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        throw std::invalid_argument("rational must be written p/q");
    BigInt n = BigInt::from_string(s.substr(0, slash));
    BigInt d = BigInt::from_string(s.substr(slash + 1));
    if (d.is_zero() || d.is_negative())
        throw std::invalid_argument("rational denominator must be positive");
    if (!BigInt::gcd(n, d).is_one())
        throw std::invalid_argument("rational not in lowest terms");
    Rational r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

} // namespace fc
