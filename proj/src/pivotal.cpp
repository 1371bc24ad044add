#include "fc/pivotal.hpp"

namespace fc {

size_t BendingMatrix::position(size_t x, size_t y, size_t z, size_t index) const {
    for (size_t i = 0; i < basis.size(); ++i) {
        const Slot& s = basis[i];
        if (s.x == x && s.y == y && s.z == z && s.index == index) return i;
    }
    throw ShapeMismatch("bending basis slot not found");
}

BendingMatrix build_B(const AssociatorSet& F, const RigidityStructure& R) {
    const FusionRing& ring = F.ring();
    const size_t n = ring.rank();
    BendingMatrix B;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                for (int i = 0; i < ring.n(x, y, z); ++i)
                    B.basis.push_back({x, y, z, static_cast<size_t>(i)});

    B.mat = Mat<Cyclotomic>(B.basis.size(), B.basis.size());
    // bare inverse-snake scalar per strand, from (a^{y*}_{y*,y,y*})^{-1}
    std::vector<Cyclotomic> snake(n);
    for (size_t y = 0; y < n; ++y) {
        size_t yd = ring.dual(y);
        Mat<Cyclotomic> m2 = inverse(F.matrix(yd, y, yd, yd));
        auto rp = canonical_basis(ring, {yd, y, yd}, yd, TreeShape::Right).position({ring.unit(), 0, 0});
        auto lp = canonical_basis(ring, {yd, y, yd}, yd, TreeShape::Left).position({ring.unit(), 0, 0});
        snake[y] = m2.at(lp, rp);
    }

    for (size_t row = 0; row < B.basis.size(); ++row) {
        const auto& s = B.basis[row];
        size_t zd = ring.dual(s.z), yd = ring.dual(s.y);
        // block of a^1_{z*,x,y}: source paths (z, i, 0), target paths (y*, j, 0)
        Mat<Cyclotomic> m = F.matrix(zd, s.x, s.y, ring.unit());
        auto rpb = canonical_basis(ring, {zd, s.x, s.y}, ring.unit(), TreeShape::Right);
        auto lpb = canonical_basis(ring, {zd, s.x, s.y}, ring.unit(), TreeShape::Left);
        size_t rp = rpb.position({s.z, s.index, 0});
        Cyclotomic scale = R.death[s.z] * R.birth[s.y] * snake[s.y];
        for (int j = 0; j < ring.n(zd, s.x, yd); ++j) {
            size_t lp = lpb.position({yd, static_cast<size_t>(j), 0});
            Cyclotomic val = scale * m.at(rp, lp);
            if (val.is_zero()) continue;
            B.mat.at(row, B.position(zd, s.x, yd, j)) = val;
        }
    }
    return B;
}

namespace {

std::string slot_name(const FusionRing& r, const BendingMatrix::Slot& s) {
    return "v^" + r.label(s.z) + "_{" + r.label(s.x) + r.label(s.y) + "}[" +
           std::to_string(s.index + 1) + "]";
}

} // namespace

PivotalAnalysis pivotal_structures(const AssociatorSet& F, const RigidityStructure& R) {
    const FusionRing& ring = F.ring();
    const size_t n = ring.rank();
    BendingMatrix B = build_B(F, R);
    PivotalAnalysis out;
    out.b_cubed = B.mat * B.mat * B.mat;

    // must be block diagonal over the (x,y,z) slots with scalar blocks
    std::vector<Cyclotomic> lambda(B.basis.size());
    for (size_t i = 0; i < B.basis.size(); ++i)
        for (size_t j = 0; j < B.basis.size(); ++j) {
            const auto &si = B.basis[i], &sj = B.basis[j];
            const Cyclotomic& v = out.b_cubed.at(i, j);
            bool same_space = si.x == sj.x && si.y == sj.y && si.z == sj.z;
            if (!same_space && !v.is_zero()) {
                out.obstruction = "B^3 maps " + slot_name(ring, si) + " outside its own space (" +
                                  slot_name(ring, sj) + ")";
                return out;
            }
            if (same_space && si.index != sj.index && !v.is_zero()) {
                out.obstruction = "B^3 is not scalar on V^" + ring.label(si.z) + "_{" +
                                  ring.label(si.x) + ring.label(si.y) + "}";
                return out;
            }
            if (same_space && si.index == sj.index) lambda[i] = v;
        }

    // solve t_x t_y = t_z lambda^z_{xy} over the 12th roots of unity;
    // coherence forces lambda = 1 on every occupied block
    for (size_t i = 0; i < B.basis.size(); ++i) {
        if (lambda[i] != Cyclotomic(1)) {
            const auto& s = B.basis[i];
            out.obstruction = "no coherent family: B^3 eigenvalue on V^" + ring.label(s.z) + "_{" +
                              ring.label(s.x) + ring.label(s.y) + "} is " + lambda[i].to_string() +
                              ", but t_" + ring.label(s.x) + " t_" + ring.label(s.y) + " = t_" +
                              ring.label(s.z) + " forces 1";
            return out;
        }
    }

    // enumerate root-of-unity families
    std::vector<Cyclotomic> roots;
    for (int k = 0; k < 12; ++k) roots.push_back(Cyclotomic::zeta(k));
    std::vector<size_t> choice(n, 0);
    std::vector<PivotalStructure> found;
    auto valid = [&](const std::vector<Cyclotomic>& t) {
        if (t[ring.unit()] != Cyclotomic(1)) return false;
        for (size_t x = 0; x < n; ++x)
            if (t[x] * t[ring.dual(x)] != Cyclotomic(1)) return false;
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z)
                    if (ring.n(x, y, z) > 0 && t[x] * t[y] != t[z]) return false;
        return true;
    };
    // fix the unit strand, sweep the rest
    size_t free_count = n - 1;
    std::vector<size_t> free_strands;
    for (size_t s = 0; s < n; ++s)
        if (s != ring.unit()) free_strands.push_back(s);
    std::vector<size_t> idx(free_count, 0);
    while (true) {
        std::vector<Cyclotomic> t(n, Cyclotomic(1));
        for (size_t k = 0; k < free_count; ++k) t[free_strands[k]] = roots[idx[k]];
        if (valid(t)) found.push_back({t});
        size_t pos = 0;
        while (pos < free_count && ++idx[pos] == roots.size()) idx[pos++] = 0;
        if (pos == free_count) break;
    }

    out.pivotal = true;
    out.structures = std::move(found);
    return out;
}

Cyclotomic fs_indicator(const PivotalStructure& P, const FusionRing& ring, size_t x) {
    if (ring.dual(x) != x) throw NotSelfDual(ring.label(x));
    return P.t[x];
}

std::pair<Cyclotomic, Cyclotomic> traces(const AssociatorSet& F, const RigidityStructure& R,
                                         const PivotalStructure& P, size_t strand,
                                         const Cyclotomic& coeff) {
    const FusionRing& ring = F.ring();
    size_t sd = ring.dual(strand);
    Cyclotomic tr_r = P.t[strand].inverse() * coeff * R.birth[strand] * R.death[sd];
    Cyclotomic tr_l = P.t[strand] * coeff * R.birth[sd] * R.death[strand];
    return {tr_r, tr_l};
}

SphericalReport spherical_check(const AssociatorSet& F, const RigidityStructure& R,
                                const PivotalStructure& P) {
    const FusionRing& ring = F.ring();
    SphericalReport rep;
    rep.spherical = true;
    bool all_self_dual = true;
    for (size_t s = 0; s < ring.rank(); ++s) {
        auto tr = traces(F, R, P, s);
        if (tr.first != tr.second) rep.spherical = false;
        rep.strand_traces.push_back(tr);
        if (ring.dual(s) != s) all_self_dual = false;
    }
    if (all_self_dual) rep.self_dual_shortcut = true;
    return rep;
}

} // namespace fc
