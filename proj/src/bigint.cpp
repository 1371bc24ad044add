#include "fc/bigint.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fc {

namespace {
constexpr uint64_t BASE = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(c - '0');
    }
    if (neg) r = -r;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    assert(compare_mag(a, b) >= 0);
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<int64_t>(BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = r[i + j] + carry + static_cast<uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth TAOCP vol.2 algorithm D.
void BigInt::divrem_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    assert(!b.empty());
    if (compare_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Normalize so the top divisor limb has its high bit set.
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    const size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i + 1] |= shift ? (a[i] >> (32 - shift)) : 0;
        u[i] = a[i] << shift;
    }
    // note: u[i] << 0 is fine; the >> (32-shift) branch is guarded above
    if (shift == 0) {
        for (size_t i = 0; i < a.size(); ++i) u[i] = a[i];
        u[a.size()] = 0;
    }
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= b[i - 1] >> (32 - shift);
    }

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= BASE ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= BASE) break;
        }
        // Multiply-subtract qhat * v from u[j..j+n].
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<int64_t>(BASE);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add back.
            t += static_cast<int64_t>(BASE);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<int64_t>(c2);
            t &= 0xffffffffll;
        }
        u[j + n] = static_cast<uint32_t>(t);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        r[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) r[i] |= static_cast<uint32_t>((static_cast<uint64_t>(u[i + 1]) << (32 - shift)) & 0xffffffffu);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::compare_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

void BigInt::divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (a.sign_ == 0) {
        q = BigInt();
        r = BigInt();
        return;
    }
    std::vector<uint32_t> qm, rm;
    divrem_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
        // divide by 1e9, collect remainder
        uint64_t rem = 0;
        for (size_t i = tmp.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | tmp[i];
            tmp[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
}

long long BigInt::to_ll() const {
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
}

} // namespace fc
