#pragma once

#include "fc/cyclotomic.hpp"
#include "fc/fusion_ring.hpp"
#include "fc/matrix.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace fc {

// ---------------------------------------------------------------------------
// Canonically ordered hom bases.
//
// Conventions, fixed project-wide:
//  * composition reads left to right, and composites act on coordinate row
//    vectors multiplied on the right by matrices in path order;
//  * the matrix stored for a^u_{x,y,z} maps the right-parenthesized basis of
//    V^u_{x(yz)} (rows) to the left-parenthesized basis of V^u_{(xy)z}
//    (columns) — data using the transposed column convention must be
//    transposed on import;
//  * direct summands are ordered by ascending label index, multiplicity
//    tuples lexicographically with the leftmost written factor major.
// ---------------------------------------------------------------------------

enum class TreeShape { Left, Right };

struct HomBasis {
    std::vector<size_t> word;
    size_t target = 0;
    TreeShape shape = TreeShape::Left;
    // Path tuples: length-2 word (i); length-3 (mid, i, j);
    // length-4 (s, t, i1, i2, i3).
    std::vector<std::vector<size_t>> paths;

    size_t dim() const { return paths.size(); }
    // Position of a path, or npos.
    size_t position(const std::vector<size_t>& path) const;
    std::string path_string(const FusionRing& r, size_t index) const;
};

struct UnsupportedWordLength : std::invalid_argument {
    explicit UnsupportedWordLength(size_t n)
        : std::invalid_argument("canonical_basis supports word lengths 2..4, got " +
                                std::to_string(n)) {}
};

HomBasis canonical_basis(const FusionRing& ring, const std::vector<size_t>& word, size_t target,
                         TreeShape shape);

// ---------------------------------------------------------------------------
// Associator tables, generic over the scalar ring.
// ---------------------------------------------------------------------------

using AssocKey = std::array<size_t, 4>;  // (x, y, z; u)

std::string assoc_name(const FusionRing& r, const AssocKey& k);
std::string pentagon_name(const FusionRing& r, size_t x, size_t y, size_t z, size_t w, size_t u);

// Source-basis dimension of a^u_{x,y,z} (= target dimension).
size_t assoc_dim(const FusionRing& ring, size_t x, size_t y, size_t z, size_t u);

template <class R>
struct AssocTable {
    FusionRing ring;
    std::map<AssocKey, Mat<R>> mats;

    bool unit_involving(const AssocKey& k) const {
        return k[0] == ring.unit() || k[1] == ring.unit() || k[2] == ring.unit();
    }

    // The matrix of a^u_{x,y,z}; unit-involving matrices are implicitly
    // identity unless explicitly overridden.
    Mat<R> matrix(size_t x, size_t y, size_t z, size_t u) const {
        AssocKey k{x, y, z, u};
        auto it = mats.find(k);
        if (it != mats.end()) return it->second;
        size_t d = assoc_dim(ring, x, y, z, u);
        if (unit_involving(k)) return Mat<R>::identity(d);
        throw ShapeMismatch("missing associator matrix " + assoc_name(ring, k));
    }

    void set(size_t x, size_t y, size_t z, size_t u, Mat<R> m) {
        size_t d = assoc_dim(ring, x, y, z, u);
        if (m.rows() != d || m.cols() != d)
            throw ShapeMismatch("associator " + assoc_name(ring, {x, y, z, u}) + " must be " +
                                std::to_string(d) + "x" + std::to_string(d) + ", got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
        mats[{x, y, z, u}] = std::move(m);
    }
};

// ---------------------------------------------------------------------------
// Pentagon machinery (generic so the solver can run it over polynomials).
//
// An instance P^u_{x,y,z,w} compares two composites across the stage spaces
//   S0 = sum V^s_{zw} V^t_{ys} V^u_{xt}   (fully right-parenthesized)
//   S3 = sum V^s_{xy} V^t_{sz} V^u_{tw}   (fully left-parenthesized)
// Both sides are assembled path-wise on the canonical stage bases; the factor
// swap tau is the permutation step of the right-hand chain.
// ---------------------------------------------------------------------------

enum class Stage { L0, L1, L2, L3, R1, R2 };

struct StagePath {
    size_t s, t, i1, i2, i3;
    bool operator==(const StagePath&) const = default;
};

// The three (a,b;c) factor spaces of a stage summand.
std::array<std::array<size_t, 3>, 3> stage_factors(Stage st, size_t x, size_t y, size_t z,
                                                   size_t w, size_t u, size_t s, size_t t);

std::vector<StagePath> stage_basis(const FusionRing& ring, Stage st, size_t x, size_t y, size_t z,
                                   size_t w, size_t u);

namespace detail {

template <class R>
Mat<R> stage_step(const AssocTable<R>& F, Stage src_stage, Stage dst_stage, size_t x, size_t y,
                  size_t z, size_t w, size_t u);

template <class R>
Mat<R> tau_step(const FusionRing& ring, size_t x, size_t y, size_t z, size_t w, size_t u);

} // namespace detail

template <class R>
struct PentagonSides {
    Mat<R> lhs, rhs;
};

template <class R>
PentagonSides<R> pentagon_instance(const AssocTable<R>& F, size_t x, size_t y, size_t z, size_t w,
                                   size_t u) {
    Mat<R> l = detail::stage_step(F, Stage::L0, Stage::L1, x, y, z, w, u) *
               detail::stage_step(F, Stage::L1, Stage::L2, x, y, z, w, u) *
               detail::stage_step(F, Stage::L2, Stage::L3, x, y, z, w, u);
    Mat<R> r = detail::stage_step(F, Stage::L0, Stage::R1, x, y, z, w, u) *
               detail::tau_step<R>(F.ring, x, y, z, w, u) *
               detail::stage_step(F, Stage::R2, Stage::L3, x, y, z, w, u);
    return {std::move(l), std::move(r)};
}

// The factor-swap permutation of P^u_{x,y,z,w} on canonical stage bases.
Mat<Cyclotomic> tau_matrix(const FusionRing& ring, size_t x, size_t y, size_t z, size_t w,
                           size_t u);

// ---------------------------------------------------------------------------
// The concrete exact associator set and its checks.
// ---------------------------------------------------------------------------

class AssociatorSet {
public:
    AssociatorSet() = default;
    explicit AssociatorSet(FusionRing ring) { table_.ring = std::move(ring); }

    const FusionRing& ring() const { return table_.ring; }
    const AssocTable<Cyclotomic>& table() const { return table_; }

    Mat<Cyclotomic> matrix(size_t x, size_t y, size_t z, size_t u) const {
        return table_.matrix(x, y, z, u);
    }
    void set_matrix(size_t x, size_t y, size_t z, size_t u, Mat<Cyclotomic> m) {
        table_.set(x, y, z, u, std::move(m));
    }
    const std::map<AssocKey, Mat<Cyclotomic>>& stored() const { return table_.mats; }

    // Every stored matrix invertible, dimensions consistent.
    void check_well_formed() const;

    AssociatorSet galois(int k) const;

private:
    AssocTable<Cyclotomic> table_;
};

struct PentagonViolation {
    size_t x, y, z, w, u;
    size_t dim;
    Mat<Cyclotomic> lhs, rhs;
    Mat<Cyclotomic> diff() const { return lhs - rhs; }
};

struct PentagonCensus {
    // raw counts of instances with no unit label, keyed by hom dimension
    std::map<size_t, size_t> nontrivial_by_dim;
    size_t onedim_raw = 0;
    size_t onedim_distinct = 0;  // after cancelling common factors
};

struct PentagonReport {
    std::vector<PentagonViolation> violations;
    PentagonCensus census;
    size_t instances_checked = 0;
    bool ok() const { return violations.empty(); }
};

PentagonReport pentagon_check(const AssociatorSet& F, int jobs = 1);

struct TriangleViolation {
    AssocKey key;
};

struct TriangleReport {
    std::vector<TriangleViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Unit-strand coherence: every unit-involving associator must be the identity.
TriangleReport triangle_check(const AssociatorSet& F);

// ---------------------------------------------------------------------------
// Gauge transformations: change of basis on the morphism spaces V^z_{xy} with
// x, y non-unit. Blocks default to identity.
// ---------------------------------------------------------------------------

struct SingularBlock : std::domain_error {
    explicit SingularBlock(const std::string& which)
        : std::domain_error("gauge block on " + which + " is singular") {}
};

struct Gauge {
    std::map<std::array<size_t, 3>, Mat<Cyclotomic>> blocks;  // key (x, y, z)

    Mat<Cyclotomic> block(const FusionRing& ring, size_t x, size_t y, size_t z) const;
    void set(size_t x, size_t y, size_t z, Mat<Cyclotomic> m) { blocks[{x, y, z}] = std::move(m); }
};

AssociatorSet gauge_transform(const AssociatorSet& F, const Gauge& g);

} // namespace fc

#include "fc/pentagon_impl.hpp"
