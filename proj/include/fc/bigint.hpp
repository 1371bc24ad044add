#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fc {

// Arbitrary-precision signed integer, sign + little-endian 32-bit magnitude.
// All arithmetic in the library bottoms out here; no floating point is used
// on any correctness path.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend. b must be nonzero.
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // -1, 0, +1 as a <=> b.
    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);

    std::string to_string() const;
    double to_double() const;

    // Fits in long long? (for diagnostics and small fast paths)
    bool fits_ll() const;
    long long to_ll() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    void trim();
};

} // namespace fc
