#include "fc/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace fc {

namespace {

// zeta^m in the power basis, m = 0..11.
constexpr int POW_TABLE[12][4] = {
    {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
    {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
    {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
};

const double SQRT3_2 = std::sqrt(3.0) / 2.0;

std::complex<double> zeta_pow_numeric(int m) {
    static const std::complex<double> table[12] = {
        {1, 0},        {SQRT3_2, 0.5},  {0.5, SQRT3_2},  {0, 1},
        {-0.5, SQRT3_2}, {-SQRT3_2, 0.5}, {-1, 0},       {-SQRT3_2, -0.5},
        {-0.5, -SQRT3_2}, {0, -1},       {0.5, -SQRT3_2}, {SQRT3_2, -0.5},
    };
    return table[((m % 12) + 12) % 12];
}

} // namespace

Cyclotomic Cyclotomic::zeta(int k) {
    int m = ((k % 12) + 12) % 12;
    return Cyclotomic(Rational(POW_TABLE[m][0]), Rational(POW_TABLE[m][1]),
                      Rational(POW_TABLE[m][2]), Rational(POW_TABLE[m][3]));
}

bool Cyclotomic::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    for (int k = 0; k < 4; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // Convolve, then fold degrees 4..6 with z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
    Rational conv[7];
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyclotomic r;
    r.c_[0] = conv[0] - conv[4] - conv[6];
    r.c_[1] = conv[1] - conv[5];
    r.c_[2] = conv[2] + conv[4];
    r.c_[3] = conv[3] + conv[5];
    return r;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    for (int k = 0; k < 4; ++k) {
        int c = Rational::compare(a.c_[k], b.c_[k]);
        if (c != 0) return c;
    }
    return 0;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Columns of M are the coordinates of (*this) * zeta^j.
    Rational m[4][5];
    for (int j = 0; j < 4; ++j) {
        Cyclotomic col = *this * zeta(j);
        for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    }
    m[0][4] = Rational(1);
    for (int i = 1; i < 4; ++i) m[i][4] = Rational(0);

    // Gaussian elimination with exact pivots.
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int row = col; row < 4; ++row)
            if (!m[row][col].is_zero()) { piv = row; break; }
        if (piv < 0) throw DivisionByZero();  // cannot happen in a field
        if (piv != col)
            for (int k = col; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
        Rational inv = m[col][col].inverse();
        for (int k = col; k < 5; ++k) m[col][k] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            Rational f = m[row][col];
            for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return Cyclotomic(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyclotomic Cyclotomic::galois(int k) const {
    if (std::gcd(((k % 12) + 12) % 12, 12) != 1) throw InvalidAutomorphism(k);
    Cyclotomic r;
    for (int j = 0; j < 4; ++j) {
        if (c_[j].is_zero()) continue;
        r += Cyclotomic(c_[j]) * zeta(j * k);
    }
    return r;
}

std::complex<double> Cyclotomic::embed() const {
    std::complex<double> r = 0;
    for (int j = 0; j < 4; ++j) {
        if (c_[j].is_zero()) continue;
        r += c_[j].to_double() * zeta_pow_numeric(j);
    }
    return r;
}

std::string Cyclotomic::to_string() const {
    std::string s = "[";
    for (int k = 0; k < 4; ++k) {
        if (k) s += ", ";
        s += c_[k].to_string();
    }
    s += "]";
    return s;
}

namespace {

// Best rational approximation p/q to x with q <= qmax (continued fractions).
// Returns false when even the best approximation is farther than tol.
bool rational_round(double x, long long qmax, double tol, long long& p_out, long long& q_out) {
    double v = x;
    long long p0 = 1, q0 = 0;            // convergent h_{-1}
    long long p1 = static_cast<long long>(std::floor(v)), q1 = 1;
    v -= std::floor(v);
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(x - static_cast<double>(p1) / q1) <= tol) break;
        if (v < 1e-14) break;
        v = 1.0 / v;
        double a_f = std::floor(v);
        if (a_f > 4e18) break;
        long long a = static_cast<long long>(a_f);
        v -= a_f;
        // next convergent; stop before exceeding qmax
        if (a > (4e18 - q0) / std::max<long long>(q1, 1)) break;
        long long q2 = a * q1 + q0;
        if (q2 > qmax) break;
        long long p2 = a * p1 + p0;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
    }
    if (q1 <= 0 || q1 > qmax) return false;
    if (std::abs(x - static_cast<double>(p1) / q1) > tol) return false;
    p_out = p1;
    q_out = q1;
    return true;
}

struct Split {
    Rational u, v;  // r = u + v*sqrt(3)
};

// All small-height decompositions r = u + v*sqrt(3); the sqrt3 part has
// denominator <= v_qmax, the rational part <= u_qmax (a sum of two bounded
// rationals). Aborts with an empty result when the decomposition becomes
// ambiguous (only possible far from genuine field elements).
std::vector<Split> sqrt3_splits(double r, long long v_qmax, long long u_qmax, double mag_cap) {
    std::vector<Split> out;
    const double s3 = std::sqrt(3.0);
    const double tol = 1e-13 * std::max(1.0, std::abs(r));
    // |v| is bounded by the cap and by |u| <= cap
    const double vlo = std::max(-mag_cap, (r - mag_cap) / s3);
    const double vhi = std::min(mag_cap, (r + mag_cap) / s3);
    for (long long q = 1; q <= v_qmax; ++q) {
        long long pmin = static_cast<long long>(std::ceil(vlo * q));
        long long pmax = static_cast<long long>(std::floor(vhi * q));
        for (long long p = pmin; p <= pmax; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            double u = r - (static_cast<double>(p) / q) * s3;
            long long up, uq;
            if (!rational_round(u, u_qmax, tol, up, uq)) continue;
            out.push_back({Rational(up, uq), Rational(p, q)});
            if (out.size() > 64) return {};
        }
    }
    return out;
}

long long max_height(const Cyclotomic& c) {
    long long h = 0;
    for (int k = 0; k < 4; ++k) {
        const auto& r = c.coeff(k);
        if (r.den().fits_ll()) h = std::max(h, std::abs(r.den().to_ll()));
        if (r.num().fits_ll()) h = std::max(h, std::abs(r.num().to_ll()));
    }
    return h;
}

} // namespace

std::optional<Cyclotomic> recognize(std::complex<double> z, long long den_bound) {
    if (den_bound < 1) return std::nullopt;
    // Basis coefficients relate to the rational/sqrt3 parts of Re and Im:
    //   Re = (c0 + c2/2) + (c1/2) sqrt(3),   Im = (c1/2 + c3) + (c2/2) sqrt(3).
    // Split each part, then solve the 4x4 (triangular) rational system.
    const double mag_cap = std::max(12.0, 2.0 * std::abs(z) + 2.0);
    const long long u_qmax = std::min<long long>(2 * den_bound * den_bound, 4'000'000);
    auto re_splits = sqrt3_splits(z.real(), 2 * den_bound, u_qmax, mag_cap);
    auto im_splits = sqrt3_splits(z.imag(), 2 * den_bound, u_qmax, mag_cap);

    std::vector<Cyclotomic> candidates;
    const Rational two(2);
    for (const auto& re : re_splits) {
        for (const auto& im : im_splits) {
            Rational c1 = re.v * two;
            Rational c2 = im.v * two;
            Rational c0 = re.u - im.v;          // u_R - c2/2
            Rational c3 = im.u - re.v;          // u_I - c1/2
            Cyclotomic cand(c0, c1, c2, c3);
            bool ok = true;
            for (int k = 0; k < 4 && ok; ++k) {
                const Rational& c = cand.coeff(k);
                if (!c.den().fits_ll() || c.den().to_ll() > den_bound) ok = false;
                if (!c.num().fits_ll() || std::abs(c.num().to_ll()) > static_cast<long long>(mag_cap) * den_bound)
                    ok = false;
            }
            if (!ok) continue;
            if (std::abs(cand.embed() - z) > 1e-8) continue;
            bool dup = false;
            for (const auto& c : candidates)
                if (c == cand) { dup = true; break; }
            if (!dup) candidates.push_back(cand);
        }
    }
    if (candidates.empty()) return std::nullopt;
    // Prefer the smallest height; ambiguity at equal height means no answer.
    size_t best = 0;
    for (size_t i = 1; i < candidates.size(); ++i)
        if (max_height(candidates[i]) < max_height(candidates[best])) best = i;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (i != best && max_height(candidates[i]) == max_height(candidates[best]))
            return std::nullopt;
    return candidates[best];
}

std::optional<Cyclotomic> try_sqrt(const Cyclotomic& a) {
    if (a.is_zero()) return Cyclotomic::zero();
    std::complex<double> root = std::sqrt(a.embed());
    for (long long bound : {4ll, 16ll, 64ll}) {
        for (auto cand : {recognize(root, bound), recognize(-root, bound)}) {
            if (cand && *cand * *cand == a) return cand;
        }
    }
    return std::nullopt;
}

} // namespace fc
