#include "fc/braiding.hpp"

#include <algorithm>

namespace fc {

Mat<Cyclotomic> RSymbolSet::block(const FusionRing& ring, size_t x, size_t y, size_t z) const {
    auto it = blocks.find({x, y, z});
    if (it != blocks.end()) return it->second;
    if (x == ring.unit() || y == ring.unit())
        return Mat<Cyclotomic>::identity(static_cast<size_t>(ring.n(x, y, z)));
    throw ShapeMismatch("missing R-symbol block");
}

std::string hexagon_name(const FusionRing& r, HexDirection dir, size_t x, size_t y, size_t z,
                         size_t t) {
    return std::string(dir == HexDirection::Forward ? "H" : "Hbar") + "^" + r.label(t) + "_{" +
           r.label(x) + "," + r.label(y) + "," + r.label(z) + "}";
}

namespace {

// Both composites of H^t_{x,y,z}, generic over the scalar ring. The provider
// returns the block of the braiding map V^s_{ba} -> V^s_{ab} for (a, b; s)
// (already inverted for the inverse orientation).
//
//   lhs:  sum_s R^s_{x,z} V^t_{ys}  ;  a^t_{y,x,z}  ;  sum_s R^s_{x,y} V^t_{sz}
//   rhs:  a^t_{y,z,x}  ;  sum_s V^s_{yz} R^t_{x,s}  ;  a^t_{x,y,z}
template <class R, class Provider>
std::pair<Mat<R>, Mat<R>> hexagon_sides(const AssocTable<R>& F, Provider&& braid, size_t x,
                                        size_t y, size_t z, size_t t) {
    const FusionRing& ring = F.ring;
    HomBasis s0 = canonical_basis(ring, {y, z, x}, t, TreeShape::Right);
    HomBasis s1l = canonical_basis(ring, {y, x, z}, t, TreeShape::Right);
    HomBasis s2l = canonical_basis(ring, {y, x, z}, t, TreeShape::Left);
    HomBasis s3 = canonical_basis(ring, {x, y, z}, t, TreeShape::Left);
    HomBasis s1r = canonical_basis(ring, {y, z, x}, t, TreeShape::Left);
    HomBasis s2r = canonical_basis(ring, {x, y, z}, t, TreeShape::Right);

    // braid the inner factor: path (s, i, j) -> sum_i' block(i, i') (s, i', j)
    auto braid_inner = [&](const HomBasis& src, const HomBasis& dst, size_t partner) -> Mat<R> {
        Mat<R> out(src.dim(), dst.dim());
        for (size_t row = 0; row < src.dim(); ++row) {
            const auto& p = src.paths[row];
            Mat<R> blk = braid(x, partner, p[0]);  // R^s_{x,partner}
            for (size_t i2 = 0; i2 < blk.cols(); ++i2) {
                const R& v = blk.at(p[1], i2);
                if (v.is_zero()) continue;
                out.at(row, dst.position({p[0], i2, p[2]})) += v;
            }
        }
        return out;
    };
    // braid the outer factor: path (s, i, j) -> sum_j' block(j, j') (s, i, j')
    auto braid_outer = [&](const HomBasis& src, const HomBasis& dst) -> Mat<R> {
        Mat<R> out(src.dim(), dst.dim());
        for (size_t row = 0; row < src.dim(); ++row) {
            const auto& p = src.paths[row];
            Mat<R> blk = braid(x, p[0], t);  // R^t_{x,s}
            for (size_t j2 = 0; j2 < blk.cols(); ++j2) {
                const R& v = blk.at(p[2], j2);
                if (v.is_zero()) continue;
                out.at(row, dst.position({p[0], p[1], j2})) += v;
            }
        }
        return out;
    };

    Mat<R> lhs = braid_inner(s0, s1l, z) * F.matrix(y, x, z, t) * braid_inner(s2l, s3, y);
    Mat<R> rhs = F.matrix(y, z, x, t) * braid_outer(s1r, s2r) * F.matrix(x, y, z, t);
    return {std::move(lhs), std::move(rhs)};
}

} // namespace

Mat<Cyclotomic> hexagon_residual(const AssociatorSet& F, const RSymbolSet& R, HexDirection dir,
                                 size_t x, size_t y, size_t z, size_t t) {
    const FusionRing& ring = F.ring();
    auto braid = [&](size_t a, size_t b, size_t s) -> Mat<Cyclotomic> {
        if (dir == HexDirection::Forward) return R.block(ring, a, b, s);
        return inverse(R.block(ring, b, a, s));
    };
    auto [lhs, rhs] = hexagon_sides(F.table(), braid, x, y, z, t);
    return lhs - rhs;
}

RSymbolSet transform_r_symbols(const FusionRing& ring, const RSymbolSet& R, const Gauge& g) {
    RSymbolSet out;
    for (const auto& [key, m] : R.blocks) {
        auto [x, y, z] = key;
        out.blocks[key] = g.block(ring, y, x, z) * m * inverse(g.block(ring, x, y, z));
    }
    return out;
}

std::vector<HexInstanceId> all_hexagon_instances(const FusionRing& ring) {
    std::vector<HexInstanceId> out;
    const size_t n = ring.rank();
    for (auto dir : {HexDirection::Forward, HexDirection::Inverse})
        for (size_t t = 0; t < n; ++t)
            for (size_t x = 0; x < n; ++x)
                for (size_t y = 0; y < n; ++y)
                    for (size_t z = 0; z < n; ++z)
                        if (hom_dim(ring, {y, z, x}, t) > 0)
                            out.push_back({dir, x, y, z, t});
    return out;
}

namespace {

struct HexSystem {
    PolySystem sys;
    std::map<std::array<size_t, 3>, size_t> block_start;   // (x,y,z) -> first var
    std::map<std::array<size_t, 3>, size_t> detinv_vars;
};

HexSystem build_hex_system(const AssociatorSet& F) {
    const FusionRing& ring = F.ring();
    HexSystem hs;
    for (size_t x = 0; x < ring.rank(); ++x)
        for (size_t y = 0; y < ring.rank(); ++y)
            for (size_t z = 0; z < ring.rank(); ++z) {
                int d = ring.n(x, y, z);
                if (d == 0) continue;
                if (x == ring.unit() || y == ring.unit()) continue;  // pinned to identity
                hs.block_start[{x, y, z}] = hs.sys.names.size();
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        hs.sys.names.push_back("r^" + ring.label(z) + "_{" + ring.label(x) + "," +
                                               ring.label(y) + "}[" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + "]");
            }
    for (const auto& [key, start] : hs.block_start) {
        hs.detinv_vars[key] = hs.sys.names.size();
        hs.sys.names.push_back("detinv(r^" + ring.label(key[2]) + "_{" + ring.label(key[0]) + "," +
                               ring.label(key[1]) + "})");
    }
    const size_t nv = hs.sys.names.size();
    for (const auto& [key, start] : hs.block_start) {
        auto [x, y, z] = key;
        size_t d = static_cast<size_t>(ring.n(x, y, z));
        size_t dv = hs.detinv_vars.at(key);
        hs.sys.invertible.insert(dv);
        Poly det;
        if (d == 1) {
            det = Poly::variable(start, nv);
            hs.sys.invertible.insert(start);
        } else if (d == 2) {
            det = Poly::variable(start, nv) * Poly::variable(start + 3, nv) -
                  Poly::variable(start + 1, nv) * Poly::variable(start + 2, nv);
        } else {
            throw ShapeMismatch("R-symbol blocks larger than 2x2 are not supported");
        }
        hs.sys.eqs.push_back({det * Poly::variable(dv, nv) - Poly::constant(Cyclotomic(1), nv),
                              "invertibility of r^" + ring.label(z) + "_{" + ring.label(x) + "," +
                                  ring.label(y) + "}"});
    }
    return hs;
}

Mat<Poly> hex_poly_block(const HexSystem& hs, const FusionRing& ring, size_t x, size_t y,
                         size_t z) {
    size_t d = static_cast<size_t>(ring.n(x, y, z));
    const size_t nv = hs.sys.names.size();
    auto it = hs.block_start.find({x, y, z});
    if (it == hs.block_start.end()) {
        Mat<Poly> ident(d, d);
        for (size_t i = 0; i < d; ++i) ident.at(i, i) = Poly::constant(Cyclotomic(1), nv);
        return ident;
    }
    size_t start = it->second;
    Mat<Poly> m(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.at(i, j) = Poly::variable(start + i * d + j, nv);
    return m;
}

Mat<Poly> hex_poly_block_inverse(const HexSystem& hs, const FusionRing& ring, size_t x, size_t y,
                                 size_t z) {
    Mat<Poly> m = hex_poly_block(hs, ring, x, y, z);
    if (!hs.block_start.count({x, y, z})) return m;  // identity block
    Poly dinv = Poly::variable(hs.detinv_vars.at({x, y, z}), hs.sys.names.size());
    size_t d = m.rows();
    Mat<Poly> r(d, d);
    if (d == 1) {
        r.at(0, 0) = dinv;
    } else {
        r.at(0, 0) = dinv * m.at(1, 1);
        r.at(0, 1) = -(dinv * m.at(0, 1));
        r.at(1, 0) = -(dinv * m.at(1, 0));
        r.at(1, 1) = dinv * m.at(0, 0);
    }
    return r;
}

BraidingSearch run_hex_solver(const AssociatorSet& F, const std::vector<HexInstanceId>& instances) {
    const FusionRing& ring = F.ring();
    HexSystem hs = build_hex_system(F);
    const size_t nv = hs.sys.names.size();

    AssocTable<Poly> FP;
    FP.ring = ring;
    for (const auto& [key, m] : F.stored()) {
        Mat<Poly> pm(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) pm.at(i, j) = Poly::constant(m.at(i, j), nv);
        FP.mats[key] = std::move(pm);
    }

    for (const auto& id : instances) {
        auto braid = [&](size_t a, size_t b, size_t s) -> Mat<Poly> {
            if (id.dir == HexDirection::Forward) return hex_poly_block(hs, ring, a, b, s);
            return hex_poly_block_inverse(hs, ring, b, a, s);
        };
        auto [lhs, rhs] = hexagon_sides(FP, braid, id.x, id.y, id.z, id.t);
        std::string name = hexagon_name(ring, id.dir, id.x, id.y, id.z, id.t);
        for (size_t i = 0; i < lhs.rows(); ++i)
            for (size_t j = 0; j < lhs.cols(); ++j) {
                Poly diff = lhs.at(i, j) - rhs.at(i, j);
                if (!diff.is_zero())
                    hs.sys.eqs.push_back({diff, name + " entry (" + std::to_string(i + 1) + "," +
                                                    std::to_string(j + 1) + ")"});
            }
    }

    SolveOptions opt;
    opt.recognize_bound = 16;
    SolveResult res;
    try {
        res = solve_system(hs.sys, opt);
    } catch (const SolverIncomplete& e) {
        if (std::string(e.what()).find("budget") != std::string::npos)
            throw BudgetExceeded(e.what());
        throw;
    }

    BraidingSearch out;
    out.log = res.log;
    for (const auto& fam : res.families) {
        if (fam.fully_resolved()) {
            auto point = fam.point(nv);
            RSymbolSet R;
            for (const auto& [key, start] : hs.block_start) {
                auto [x, y, z] = key;
                size_t d = static_cast<size_t>(ring.n(x, y, z));
                Mat<Cyclotomic> m(d, d);
                for (size_t i = 0; i < d; ++i)
                    for (size_t j = 0; j < d; ++j) m.at(i, j) = point[start + i * d + j];
                R.blocks[key] = std::move(m);
            }
            for (const auto& id : instances)
                if (!hexagon_residual(F, R, id.dir, id.x, id.y, id.z, id.t).is_zero())
                    throw CertificateFailure("resolved braiding failed exact re-verification");
            out.braidings.push_back(std::move(R));
        } else {
            out.parametric.push_back(fam);
        }
    }
    if (out.braidings.empty() && out.parametric.empty()) {
        NoBraidingCertificate cert;
        if (!res.dead.empty()) {
            const DeadBranch* best = &res.dead.front();
            for (const auto& d : res.dead)
                if (d.steps.size() > best->steps.size()) best = &d;
            for (const auto& s : best->steps) {
                size_t colon = s.find(": ");
                if (colon == std::string::npos)
                    cert.steps.push_back({"", s});
                else
                    cert.steps.push_back({s.substr(0, colon), s.substr(colon + 2)});
            }
            cert.contradiction = best->contradiction;
        }
        out.no_braiding = std::move(cert);
    }
    return out;
}

} // namespace

BraidingSearch search_braidings(const AssociatorSet& F) {
    return run_hex_solver(F, all_hexagon_instances(F.ring()));
}

BraidingSearch solve_hexagon_subsystem(const AssociatorSet& F,
                                       const std::vector<HexInstanceId>& instances) {
    return run_hex_solver(F, instances);
}

NoBraidingCertificate prove_no_braiding(const AssociatorSet& F) {
    const FusionRing& ring = F.ring();
    if (!(ring == rank3_ring()))
        throw std::invalid_argument("prove_no_braiding applies to the rank-3 ring only");
    if (!pentagon_check(F).ok())
        throw std::invalid_argument("prove_no_braiding requires a pentagon solution");

    const size_t U = 0, Y = 1, X = 2;
    // the five binding 2-dimensional instances
    std::vector<HexInstanceId> five = {
        {HexDirection::Forward, Y, X, X, X},  // H^x_{y,x,x}
        {HexDirection::Inverse, Y, X, X, X},
        {HexDirection::Forward, X, Y, X, X},  // H^x_{x,y,x}
        {HexDirection::Inverse, X, Y, X, X},
        {HexDirection::Forward, X, X, X, U},  // H^1_{x,x,x}
    };
    BraidingSearch res = run_hex_solver(F, five);
    if (!res.empty())
        throw CertificateFailure("the five binding instances unexpectedly admit solutions");
    if (!res.no_braiding) throw CertificateFailure("no certificate produced");
    return *res.no_braiding;
}

} // namespace fc
