#include "fc/associator.hpp"

#include "fc/parallel.hpp"

#include <algorithm>
#include <memory>

namespace fc {

size_t HomBasis::position(const std::vector<size_t>& path) const {
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == path) return i;
    throw ShapeMismatch("basis path not found");
}

std::string HomBasis::path_string(const FusionRing& r, size_t index) const {
    const auto& p = paths[index];
    if (word.size() == 2) return "v_" + std::to_string(p[0] + 1);
    if (word.size() == 3) {
        // (mid, i, j): inner fusion vector then outer
        std::string a = shape == TreeShape::Right
                            ? "v^" + r.label(p[0]) + "_{" + r.label(word[1]) + r.label(word[2]) + "}"
                            : "v^" + r.label(p[0]) + "_{" + r.label(word[0]) + r.label(word[1]) + "}";
        std::string b = shape == TreeShape::Right
                            ? "v^" + r.label(target) + "_{" + r.label(word[0]) + r.label(p[0]) + "}"
                            : "v^" + r.label(target) + "_{" + r.label(p[0]) + r.label(word[2]) + "}";
        return a + "[" + std::to_string(p[1] + 1) + "] " + b + "[" + std::to_string(p[2] + 1) + "]";
    }
    return "(s=" + r.label(p[0]) + ",t=" + r.label(p[1]) + ";" + std::to_string(p[2] + 1) + "," +
           std::to_string(p[3] + 1) + "," + std::to_string(p[4] + 1) + ")";
}

HomBasis canonical_basis(const FusionRing& ring, const std::vector<size_t>& word, size_t target,
                         TreeShape shape) {
    for (size_t s : word)
        if (s >= ring.rank()) throw UnknownLabel(std::to_string(s));
    if (target >= ring.rank()) throw UnknownLabel(std::to_string(target));

    HomBasis b;
    b.word = word;
    b.target = target;
    b.shape = shape;

    const size_t n = ring.rank();
    switch (word.size()) {
        case 2: {
            int d = ring.n(word[0], word[1], target);
            for (int i = 0; i < d; ++i) b.paths.push_back({static_cast<size_t>(i)});
            break;
        }
        case 3: {
            for (size_t mid = 0; mid < n; ++mid) {
                int d1 = shape == TreeShape::Right ? ring.n(word[1], word[2], mid)
                                                   : ring.n(word[0], word[1], mid);
                int d2 = shape == TreeShape::Right ? ring.n(word[0], mid, target)
                                                   : ring.n(mid, word[2], target);
                for (int i = 0; i < d1; ++i)
                    for (int j = 0; j < d2; ++j)
                        b.paths.push_back({mid, static_cast<size_t>(i), static_cast<size_t>(j)});
            }
            break;
        }
        case 4: {
            Stage st = shape == TreeShape::Right ? Stage::L0 : Stage::L3;
            for (const auto& p :
                 stage_basis(ring, st, word[0], word[1], word[2], word[3], target))
                b.paths.push_back({p.s, p.t, p.i1, p.i2, p.i3});
            break;
        }
        default:
            throw UnsupportedWordLength(word.size());
    }
    return b;
}

std::string assoc_name(const FusionRing& r, const AssocKey& k) {
    return "a^" + r.label(k[3]) + "_{" + r.label(k[0]) + "," + r.label(k[1]) + "," + r.label(k[2]) +
           "}";
}

std::string pentagon_name(const FusionRing& r, size_t x, size_t y, size_t z, size_t w, size_t u) {
    return "P^" + r.label(u) + "_{" + r.label(x) + "," + r.label(y) + "," + r.label(z) + "," +
           r.label(w) + "}";
}

size_t assoc_dim(const FusionRing& ring, size_t x, size_t y, size_t z, size_t u) {
    size_t d = 0;
    for (size_t mid = 0; mid < ring.rank(); ++mid)
        d += static_cast<size_t>(ring.n(y, z, mid)) * ring.n(x, mid, u);
    return d;
}

std::array<std::array<size_t, 3>, 3> stage_factors(Stage st, size_t x, size_t y, size_t z,
                                                   size_t w, size_t u, size_t s, size_t t) {
    switch (st) {
        case Stage::L0: return {{{z, w, s}, {y, s, t}, {x, t, u}}};
        case Stage::L1: return {{{y, z, s}, {s, w, t}, {x, t, u}}};
        case Stage::L2: return {{{y, z, s}, {x, s, t}, {t, w, u}}};
        case Stage::L3: return {{{x, y, s}, {s, z, t}, {t, w, u}}};
        case Stage::R1: return {{{z, w, s}, {x, y, t}, {t, s, u}}};
        case Stage::R2: return {{{x, y, s}, {z, w, t}, {s, t, u}}};
    }
    throw std::logic_error("bad stage");
}

std::vector<StagePath> stage_basis(const FusionRing& ring, Stage st, size_t x, size_t y, size_t z,
                                   size_t w, size_t u) {
    std::vector<StagePath> out;
    const size_t n = ring.rank();
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            auto f = stage_factors(st, x, y, z, w, u, s, t);
            size_t d1 = ring.n(f[0][0], f[0][1], f[0][2]);
            size_t d2 = ring.n(f[1][0], f[1][1], f[1][2]);
            size_t d3 = ring.n(f[2][0], f[2][1], f[2][2]);
            for (size_t i1 = 0; i1 < d1; ++i1)
                for (size_t i2 = 0; i2 < d2; ++i2)
                    for (size_t i3 = 0; i3 < d3; ++i3) out.push_back({s, t, i1, i2, i3});
        }
    return out;
}

Mat<Cyclotomic> tau_matrix(const FusionRing& ring, size_t x, size_t y, size_t z, size_t w,
                           size_t u) {
    return detail::tau_step<Cyclotomic>(ring, x, y, z, w, u);
}

void AssociatorSet::check_well_formed() const {
    const FusionRing& r = ring();
    for (const auto& [key, m] : table_.mats) {
        for (size_t lbl : key)
            if (lbl >= r.rank()) throw UnknownLabel(std::to_string(lbl));
        size_t d = assoc_dim(r, key[0], key[1], key[2], key[3]);
        if (m.rows() != d || m.cols() != d)
            throw ShapeMismatch("associator " + assoc_name(r, key) + " has wrong shape");
        if (d > 0 && det(m).is_zero())
            throw SingularMatrix();
    }
}

AssociatorSet AssociatorSet::galois(int k) const {
    AssociatorSet out(ring());
    for (const auto& [key, m] : table_.mats) {
        Mat<Cyclotomic> g(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) g.at(i, j) = m.at(i, j).galois(k);
        out.table_.mats[key] = std::move(g);
    }
    return out;
}

namespace {

// Multiset pair identifying the scalar equation of a 1-dimensional instance,
// with common factors cancelled; used to reconcile the raw and deduplicated
// 1-dimensional instance counts.
using KeyCount = std::map<AssocKey, int>;

std::pair<std::string, std::string> instance_equation_id(const FusionRing& ring, size_t x, size_t y,
                                                         size_t z, size_t w, size_t u) {
    KeyCount lhs, rhs;
    auto add = [&](KeyCount& side, AssocKey k) {
        if (k[0] != ring.unit() && k[1] != ring.unit() && k[2] != ring.unit()) side[k] += 1;
    };
    // 1-dimensional instance: each step traverses a single scalar block
    for (const auto& p : stage_basis(ring, Stage::L0, x, y, z, w, u)) {
        add(lhs, {y, z, w, p.t});  // L0 -> L1
        add(rhs, {x, y, p.s, u});  // L0 -> R1
    }
    for (const auto& p : stage_basis(ring, Stage::L1, x, y, z, w, u))
        add(lhs, {x, p.s, w, u});  // L1 -> L2
    for (const auto& p : stage_basis(ring, Stage::L2, x, y, z, w, u))
        add(lhs, {x, y, z, p.t});  // L2 -> L3
    for (const auto& p : stage_basis(ring, Stage::R2, x, y, z, w, u))
        add(rhs, {p.s, z, w, u});  // R2 -> L3 (tau contributes no scalar)
    // cancel common factors
    for (auto& [k, c] : lhs) {
        auto it = rhs.find(k);
        if (it == rhs.end()) continue;
        int m = std::min(c, it->second);
        c -= m;
        it->second -= m;
    }
    auto render = [&](const KeyCount& kc) {
        std::string s;
        for (const auto& [k, c] : kc)
            for (int i = 0; i < c; ++i) s += assoc_name(ring, k) + " ";
        return s;
    };
    std::string a = render(lhs), b = render(rhs);
    if (b < a) std::swap(a, b);
    return {a, b};
}

} // namespace

PentagonReport pentagon_check(const AssociatorSet& F, int jobs) {
    const FusionRing& ring = F.ring();
    const size_t n = ring.rank();
    PentagonReport rep;

    struct Instance {
        size_t x, y, z, w, u, dim;
    };
    std::vector<Instance> instances;
    std::vector<std::pair<std::string, std::string>> onedim_ids;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z)
                for (size_t w = 0; w < n; ++w)
                    for (size_t u = 0; u < n; ++u) {
                        size_t dim = hom_dim(ring, {x, y, z, w}, u);
                        if (dim == 0) continue;
                        instances.push_back({x, y, z, w, u, dim});
                        bool nontrivial = x != ring.unit() && y != ring.unit() &&
                                          z != ring.unit() && w != ring.unit();
                        if (nontrivial) {
                            rep.census.nontrivial_by_dim[dim] += 1;
                            if (dim == 1) {
                                rep.census.onedim_raw += 1;
                                onedim_ids.push_back(instance_equation_id(ring, x, y, z, w, u));
                            }
                        }
                    }
    std::sort(onedim_ids.begin(), onedim_ids.end());
    rep.census.onedim_distinct =
        std::unique(onedim_ids.begin(), onedim_ids.end()) - onedim_ids.begin();

    rep.instances_checked = instances.size();
    std::vector<std::unique_ptr<PentagonViolation>> slots(instances.size());
    parallel_for(instances.size(), jobs, [&](size_t i) {
        const Instance& in = instances[i];
        auto sides = pentagon_instance(F.table(), in.x, in.y, in.z, in.w, in.u);
        if (sides.lhs != sides.rhs) {
            slots[i] = std::make_unique<PentagonViolation>(
                PentagonViolation{in.x, in.y, in.z, in.w, in.u, in.dim, sides.lhs, sides.rhs});
        }
    });
    for (auto& s : slots)
        if (s) rep.violations.push_back(std::move(*s));
    return rep;
}

TriangleReport triangle_check(const AssociatorSet& F) {
    const FusionRing& ring = F.ring();
    const size_t n = ring.rank();
    TriangleReport rep;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (size_t z = 0; z < n; ++z) {
                if (x != ring.unit() && y != ring.unit() && z != ring.unit()) continue;
                for (size_t u = 0; u < n; ++u) {
                    size_t d = assoc_dim(ring, x, y, z, u);
                    if (d == 0) continue;
                    if (!F.matrix(x, y, z, u).is_identity())
                        rep.violations.push_back({AssocKey{x, y, z, u}});
                }
            }
    return rep;
}

Mat<Cyclotomic> Gauge::block(const FusionRing& ring, size_t x, size_t y, size_t z) const {
    size_t d = ring.n(x, y, z);
    auto it = blocks.find({x, y, z});
    if (it == blocks.end()) return Mat<Cyclotomic>::identity(d);
    if (x == ring.unit() || y == ring.unit())
        throw ShapeMismatch("gauge blocks on unit-involving spaces are pinned to the identity");
    if (it->second.rows() != d || it->second.cols() != d)
        throw ShapeMismatch("gauge block on V^" + ring.label(z) + "_{" + ring.label(x) +
                            ring.label(y) + "} has wrong shape");
    return it->second;
}

AssociatorSet gauge_transform(const AssociatorSet& F, const Gauge& g) {
    const FusionRing& ring = F.ring();
    for (const auto& [key, m] : g.blocks) {
        if (det(m).is_zero())
            throw SingularBlock("V^" + ring.label(key[2]) + "_{" + ring.label(key[0]) +
                                ring.label(key[1]) + "}");
    }
    AssociatorSet out(ring);
    for (const auto& [key, m] : F.stored()) {
        auto [x, y, z, u] = key;
        // sum_t G^t_{yz} (x) G^u_{xt}  on the right-parenthesized side
        Mat<Cyclotomic> src(0, 0), tgt(0, 0);
        for (size_t t = 0; t < ring.rank(); ++t) {
            if (ring.n(y, z, t) == 0 || ring.n(x, t, u) == 0) continue;
            auto piece = Mat<Cyclotomic>::kron(g.block(ring, y, z, t), g.block(ring, x, t, u));
            src = src.empty() ? piece : Mat<Cyclotomic>::direct_sum(src, piece);
        }
        for (size_t s = 0; s < ring.rank(); ++s) {
            if (ring.n(x, y, s) == 0 || ring.n(s, z, u) == 0) continue;
            auto piece = Mat<Cyclotomic>::kron(g.block(ring, x, y, s), g.block(ring, s, z, u));
            tgt = tgt.empty() ? piece : Mat<Cyclotomic>::direct_sum(tgt, piece);
        }
        out.set_matrix(x, y, z, u, src * m * inverse(tgt));
    }
    return out;
}

} // namespace fc
