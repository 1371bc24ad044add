#include "fc/rigidity.hpp"

#include "fc/pivotal.hpp"

namespace fc {

namespace {

// unit-channel positions of a^a_{a,b,c}-style words
size_t unit_channel(const FusionRing& ring, const std::vector<size_t>& word, size_t target,
                    TreeShape shape) {
    return canonical_basis(ring, word, target, shape).position({ring.unit(), 0, 0});
}

} // namespace

RigidityStructure build_rigidity(const AssociatorSet& F) {
    const FusionRing& ring = F.ring();
    RigidityStructure R;
    R.birth.resize(ring.rank());
    R.death.resize(ring.rank());
    for (size_t x = 0; x < ring.rank(); ++x) {
        size_t xd = ring.dual(x);
        Mat<Cyclotomic> m = F.matrix(x, xd, x, x);
        size_t rp = unit_channel(ring, {x, xd, x}, x, TreeShape::Right);
        size_t lp = unit_channel(ring, {x, xd, x}, x, TreeShape::Left);
        Cyclotomic corner = m.at(rp, lp);
        if (corner.is_zero()) throw ZeroCorner(ring.label(x) + "_{" + ring.label(x) + "," +
                                               ring.label(xd) + "," + ring.label(x) + "}");
        R.death[x] = Cyclotomic(1);
        R.birth[x] = corner.inverse();
    }
    return R;
}

std::vector<std::pair<Cyclotomic, Cyclotomic>> snake_check(const AssociatorSet& F,
                                                           const RigidityStructure& R) {
    const FusionRing& ring = F.ring();
    std::vector<std::pair<Cyclotomic, Cyclotomic>> out(ring.rank());
    for (size_t x = 0; x < ring.rank(); ++x) {
        size_t xd = ring.dual(x);
        // right zig-zag through a^x_{x,x*,x}
        Mat<Cyclotomic> m = F.matrix(x, xd, x, x);
        size_t rp = unit_channel(ring, {x, xd, x}, x, TreeShape::Right);
        size_t lp = unit_channel(ring, {x, xd, x}, x, TreeShape::Left);
        Cyclotomic right = R.birth[x] * R.death[x] * m.at(rp, lp);
        // left zig-zag through (a^{x*}_{x*,x,x*})^{-1}
        Mat<Cyclotomic> m2 = inverse(F.matrix(xd, x, xd, xd));
        size_t rp2 = unit_channel(ring, {xd, x, xd}, xd, TreeShape::Right);
        size_t lp2 = unit_channel(ring, {xd, x, xd}, xd, TreeShape::Left);
        Cyclotomic left = R.birth[x] * R.death[x] * m2.at(lp2, rp2);
        out[x] = {right, left};
    }
    return out;
}

std::vector<Cyclotomic> dual_on_basis(const AssociatorSet& F, const RigidityStructure& R,
                                      size_t x, size_t y, size_t z, size_t index) {
    BendingMatrix B = build_B(F, R);
    size_t row = B.position(x, y, z, index);
    const FusionRing& ring = F.ring();
    size_t yd = ring.dual(y), zd = ring.dual(z);
    size_t n = static_cast<size_t>(ring.n(zd, x, yd));
    std::vector<Cyclotomic> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = B.mat.at(row, B.position(zd, x, yd, j));
    return out;
}

std::vector<Cyclotomic> double_dual_on_basis(const AssociatorSet& F, const RigidityStructure& R,
                                             size_t x, size_t y, size_t z, size_t index) {
    BendingMatrix B = build_B(F, R);
    Mat<Cyclotomic> cube = B.mat * B.mat * B.mat;
    size_t row = B.position(x, y, z, index);
    size_t n = static_cast<size_t>(F.ring().n(x, y, z));
    std::vector<Cyclotomic> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = cube.at(row, B.position(x, y, z, j));
    return out;
}

std::pair<Cyclotomic, Cyclotomic> pseudo_traces(const RigidityStructure& R, const FusionRing& ring,
                                                size_t z) {
    size_t zd = ring.dual(z);
    return {R.birth[z] * R.death[zd], R.birth[zd] * R.death[z]};
}

RigidityStructure balance_pseudo_traces(const AssociatorSet& F, const RigidityStructure& R) {
    const FusionRing& ring = F.ring();
    RigidityStructure out = R;
    for (size_t z = 0; z < ring.rank(); ++z) {
        size_t zd = ring.dual(z);
        if (zd <= z) continue;  // self-dual strands are already balanced
        // rescale (birth_z, death_z) by (c, 1/c):
        //   ptr_r(z) = c birth_z death_{z*},  ptr_l(z) = birth_{z*} death_z / c
        Cyclotomic ratio = (out.birth[zd] * out.death[z]) *
                           (out.birth[z] * out.death[zd]).inverse();
        auto c = try_sqrt(ratio);
        if (!c)
            throw NoSquareRootInField("balancing strand " + ring.label(z) +
                                      " needs a square root outside Q(zeta_12)");
        out.birth[z] = *c * out.birth[z];
        out.death[z] = c->inverse() * out.death[z];
    }
    return out;
}

bool quadruple_dual_check(const AssociatorSet& F, const RigidityStructure& R) {
    BendingMatrix B = build_B(F, R);
    Mat<Cyclotomic> sq = B.mat * B.mat;
    Mat<Cyclotomic> sixth = sq * sq * sq;
    return sixth.is_identity();
}

} // namespace fc
