#pragma once

// Template implementation of the pentagon stage maps. Included by
// associator.hpp; not a public interface.

#include "fc/associator.hpp"

namespace fc::detail {

// Which associator acts for the step src -> dst, given the grouping label g
// (g = path.t when acting on factors (1,2), g = path.s when acting on (2,3)).
inline AssocKey step_key(Stage src, Stage dst, size_t x, size_t y, size_t z, size_t w, size_t u,
                         size_t g) {
    if (src == Stage::L0 && dst == Stage::L1) return {y, z, w, g};
    if (src == Stage::L1 && dst == Stage::L2) return {x, g, w, u};
    if (src == Stage::L2 && dst == Stage::L3) return {x, y, z, g};
    if (src == Stage::L0 && dst == Stage::R1) return {x, y, g, u};
    if (src == Stage::R2 && dst == Stage::L3) return {g, z, w, u};
    throw std::logic_error("bad pentagon step");
}

inline bool step_acts_on_12(Stage src, Stage dst) {
    if (src == Stage::L0 && dst == Stage::L1) return true;
    if (src == Stage::L2 && dst == Stage::L3) return true;
    return false;
}

template <class R>
Mat<R> stage_step(const AssocTable<R>& F, Stage src_stage, Stage dst_stage, size_t x, size_t y,
                  size_t z, size_t w, size_t u) {
    const FusionRing& ring = F.ring;
    auto src = stage_basis(ring, src_stage, x, y, z, w, u);
    auto dst = stage_basis(ring, dst_stage, x, y, z, w, u);
    const bool on12 = step_acts_on_12(src_stage, dst_stage);

    auto dst_pos = [&](const StagePath& p) -> size_t {
        for (size_t i = 0; i < dst.size(); ++i)
            if (dst[i] == p) return i;
        throw ShapeMismatch("pentagon stage path not found in target basis");
    };

    // cache hom bases and matrices per grouping label
    std::map<AssocKey, std::pair<HomBasis, HomBasis>> bases;
    std::map<AssocKey, Mat<R>> blocks;

    Mat<R> out(src.size(), dst.size());
    for (size_t row = 0; row < src.size(); ++row) {
        const StagePath& p = src[row];
        const size_t g = on12 ? p.t : p.s;
        AssocKey k = step_key(src_stage, dst_stage, x, y, z, w, u, g);
        auto bit = bases.find(k);
        if (bit == bases.end()) {
            HomBasis rp = canonical_basis(ring, {k[0], k[1], k[2]}, k[3], TreeShape::Right);
            HomBasis lp = canonical_basis(ring, {k[0], k[1], k[2]}, k[3], TreeShape::Left);
            bit = bases.emplace(k, std::make_pair(std::move(rp), std::move(lp))).first;
            blocks.emplace(k, F.matrix(k[0], k[1], k[2], k[3]));
        }
        const HomBasis& rp = bit->second.first;
        const HomBasis& lp = bit->second.second;
        const Mat<R>& block = blocks.at(k);

        std::vector<size_t> rp_path = on12 ? std::vector<size_t>{p.s, p.i1, p.i2}
                                           : std::vector<size_t>{p.t, p.i2, p.i3};
        size_t rp_pos = rp.position(rp_path);
        for (size_t c = 0; c < lp.dim(); ++c) {
            const R& val = block.at(rp_pos, c);
            if (val.is_zero()) continue;
            const auto& q = lp.paths[c];
            StagePath tp = on12 ? StagePath{q[0], p.t, q[1], q[2], p.i3}
                                : StagePath{p.s, q[0], p.i1, q[1], q[2]};
            out.at(row, dst_pos(tp)) += val;
        }
    }
    return out;
}

template <class R>
Mat<R> tau_step(const FusionRing& ring, size_t x, size_t y, size_t z, size_t w, size_t u) {
    auto src = stage_basis(ring, Stage::R1, x, y, z, w, u);
    auto dst = stage_basis(ring, Stage::R2, x, y, z, w, u);
    Mat<R> out(src.size(), dst.size());
    for (size_t row = 0; row < src.size(); ++row) {
        const StagePath& p = src[row];
        StagePath q{p.t, p.s, p.i2, p.i1, p.i3};
        for (size_t c = 0; c < dst.size(); ++c)
            if (dst[c] == q) {
                out.at(row, c) = R(1);
                break;
            }
    }
    return out;
}

} // namespace fc::detail
