#include "fc/fixtures.hpp"

namespace fc::fixtures {

namespace {

Cyclotomic zeta(int k) { return Cyclotomic::zeta(k); }
Cyclotomic half() { return Cyclotomic::rational(1, 2); }

Mat<Cyclotomic> scalar1(const Cyclotomic& v) {
    Mat<Cyclotomic> m(1, 1);
    m.at(0, 0) = v;
    return m;
}

Mat<Cyclotomic> mat2(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                     const Cyclotomic& d) {
    Mat<Cyclotomic> m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

Cyclotomic phi_value() { return (Cyclotomic(-1) + Cyclotomic::sqrt3()) * half(); }

Cyclotomic d_value() { return (-zeta(1) + zeta(2) + zeta(3)) * half(); }

Cyclotomic w_value() {
    return (Cyclotomic(1) - Cyclotomic::sqrt3()) * Cyclotomic::rational(1, 4) * zeta(4);
}

Cyclotomic y_value() { return (zeta(-2) + zeta(3)) * half(); }

Cyclotomic z_value() { return zeta(5) * half(); }

AssociatorSet rank3_solution() {
    FusionRing ring = rank3_ring();
    const size_t U = 0, Y = 1, X = 2;
    AssociatorSet F(ring);

    const Cyclotomic one(1), minus_one(-1);
    const Cyclotomic i = Cyclotomic::i();

    // 1-dimensional associativity scalars
    F.set_matrix(Y, Y, Y, Y, scalar1(one));   // a^y_{y,y,y}
    F.set_matrix(X, Y, Y, X, scalar1(one));   // a^x_{x,y,y}
    F.set_matrix(Y, Y, X, X, scalar1(one));   // a^x_{y,y,x}
    F.set_matrix(X, Y, X, U, scalar1(one));   // a^1_{x,y,x}
    F.set_matrix(X, X, Y, U, scalar1(one));   // a^1_{x,x,y}
    F.set_matrix(X, X, Y, Y, scalar1(one));   // a^y_{x,x,y}
    F.set_matrix(Y, X, X, U, scalar1(one));   // a^1_{y,x,x}
    F.set_matrix(Y, X, X, Y, scalar1(one));   // a^y_{y,x,x}
    F.set_matrix(X, Y, X, Y, scalar1(minus_one));  // a^y_{x,y,x}
    F.set_matrix(Y, X, Y, X, scalar1(minus_one));  // a^x_{y,x,y}

    // 2-dimensional blocks
    F.set_matrix(X, Y, X, X, mat2(one, Cyclotomic(), Cyclotomic(), minus_one));  // a^x_{x,y,x}
    F.set_matrix(X, X, Y, X, mat2(Cyclotomic(), i, -i, Cyclotomic()));           // a^x_{x,x,y}
    F.set_matrix(Y, X, X, X, mat2(Cyclotomic(), one, one, Cyclotomic()));        // a^x_{y,x,x}

    const Cyclotomic d = d_value();
    F.set_matrix(X, X, X, U, mat2(d, d * i, d, -(d * i)));       // a^1_{x,x,x}
    F.set_matrix(X, X, X, Y, mat2(d * i, d, -(d * i), d));       // a^y_{x,x,x}

    // the 6-dimensional block a^x_{x,x,x}, entry by entry
    const Cyclotomic phi = phi_value();
    const Cyclotomic q = (Cyclotomic(1) - Cyclotomic::sqrt3()) * Cyclotomic::rational(1, 4);
    const Cyclotomic e_pi6 = zeta(1), e_2pi3 = zeta(4), e_pi3 = zeta(2);
    const Cyclotomic e_5pi6 = zeta(5), e_m_pi3 = zeta(-2);
    const Cyclotomic half_ = half();

    Mat<Cyclotomic> big(6, 6);
    auto row = [&](size_t r, std::initializer_list<Cyclotomic> vals) {
        size_t c = 0;
        for (const auto& v : vals) big.at(r, c++) = v;
    };
    row(0, {phi, phi, q * e_pi6, q * e_2pi3, q * e_2pi3, q * e_pi6});
    row(1, {phi, -phi, q * e_pi6, q * e_2pi3, -(q * e_2pi3), -(q * e_pi6)});
    row(2, {Cyclotomic(1), Cyclotomic(1), -(half_ * (e_pi6 - Cyclotomic(1))), half_ * e_5pi6,
            half_ * (e_m_pi3 + i), half_ * e_pi3});
    row(3, {Cyclotomic(1), Cyclotomic(1), half_ * e_pi3, half_ * (e_m_pi3 + i), half_ * e_5pi6,
            -(half_ * (e_pi6 - Cyclotomic(1)))});
    row(4, {Cyclotomic(1), Cyclotomic(-1), -(half_ * (e_pi6 - Cyclotomic(1))), half_ * e_5pi6,
            -(half_ * (e_m_pi3 + i)), -(half_ * e_pi3)});
    row(5, {Cyclotomic(-1), Cyclotomic(1), -(half_ * e_pi3), -(half_ * (e_m_pi3 + i)),
            half_ * e_5pi6, -(half_ * (e_pi6 - Cyclotomic(1)))});
    F.set_matrix(X, X, X, X, big);

    return F;
}

AssociatorSet solution_from_params(const Cyclotomic& b, const Cyclotomic& phi,
                                   const Cyclotomic& d, const Cyclotomic& w, const Cyclotomic& y,
                                   const Cyclotomic& z) {
    FusionRing ring = rank3_ring();
    const size_t U = 0, Y = 1, X = 2;
    AssociatorSet F(ring);
    const Cyclotomic one(1);

    F.set_matrix(Y, Y, Y, Y, scalar1(one));
    F.set_matrix(X, Y, Y, X, scalar1(one));
    F.set_matrix(Y, Y, X, X, scalar1(one));
    F.set_matrix(X, Y, X, U, scalar1(one));
    F.set_matrix(X, X, Y, U, scalar1(one));
    F.set_matrix(X, X, Y, Y, scalar1(one));
    F.set_matrix(Y, X, X, U, scalar1(one));          // h = 1
    F.set_matrix(Y, X, X, Y, scalar1(one));
    F.set_matrix(X, Y, X, Y, scalar1(Cyclotomic(-1)));  // g = -1
    F.set_matrix(Y, X, Y, X, scalar1(Cyclotomic(-1)));

    F.set_matrix(X, Y, X, X, mat2(one, Cyclotomic(), Cyclotomic(), Cyclotomic(-1)));
    F.set_matrix(X, X, Y, X, mat2(Cyclotomic(), b, b.inverse(), Cyclotomic()));
    F.set_matrix(Y, X, X, X, mat2(Cyclotomic(), one, one, Cyclotomic()));  // f = 1
    F.set_matrix(X, X, X, U, mat2(d, d * b, d, -(d * b)));
    F.set_matrix(X, X, X, Y, mat2(d * b, d, -(d * b), d));

    const Cyclotomic xp(1);  // normalized corner of the lower block
    Mat<Cyclotomic> big(6, 6);
    auto row = [&](size_t r, std::initializer_list<Cyclotomic> vals) {
        size_t c = 0;
        for (const auto& v : vals) big.at(r, c++) = v;
    };
    row(0, {phi, phi, -(w * b), w, w, -(w * b)});
    row(1, {phi, -phi, -(w * b), w, -w, w * b});
    row(2, {xp, xp, -(y * b), z, y, -(z * b)});
    row(3, {xp, xp, -(z * b), y, z, -(y * b)});
    row(4, {xp, -xp, -(y * b), z, -y, z * b});
    row(5, {-xp, xp, z * b, -y, z, -(y * b)});
    F.set_matrix(X, X, X, X, big);
    return F;
}

AssociatorSet trivial_solution() { return AssociatorSet(trivial_ring()); }

AssociatorSet pointed_cyclic_solution(size_t n) {
    AssociatorSet F(cyclic_group_ring(n));
    const FusionRing& r = F.ring();
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                if (x == r.unit() || y == r.unit() || z == r.unit()) continue;
                size_t u = (x + y + z) % n;
                F.set_matrix(x, y, z, u, Mat<Cyclotomic>::identity(1));
            }
    return F;
}

} // namespace fc::fixtures
