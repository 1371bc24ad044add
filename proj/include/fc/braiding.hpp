#pragma once

#include "fc/associator.hpp"
#include "fc/poly.hpp"

#include <optional>

namespace fc {

// Candidate braiding data: one invertible block per (x,y;z) with
// N^z_{xy} > 0, the matrix of the map V^z_{yx} -> V^z_{xy}. Blocks with a
// unit label are pinned to the identity (the hexagon forces c_{1,x} and
// c_{x,1} trivial) and are never stored.
struct RSymbolSet {
    std::map<std::array<size_t, 3>, Mat<Cyclotomic>> blocks;

    Mat<Cyclotomic> block(const FusionRing& ring, size_t x, size_t y, size_t z) const;
};

enum class HexDirection { Forward, Inverse };

std::string hexagon_name(const FusionRing& r, HexDirection dir, size_t x, size_t y, size_t z,
                         size_t t);

// Exact difference of the two composites of H^t_{x,y,z} (or the inverse
// orientation); zero iff the instance holds.
Mat<Cyclotomic> hexagon_residual(const AssociatorSet& F, const RSymbolSet& R, HexDirection dir,
                                 size_t x, size_t y, size_t z, size_t t);

// R-symbols transform with the same basis changes as the associators.
RSymbolSet transform_r_symbols(const FusionRing& ring, const RSymbolSet& R, const Gauge& g);

struct CertificateStep {
    std::string source;      // hexagon instance (entry) the constraint came from
    std::string constraint;
};

struct NoBraidingCertificate {
    std::vector<CertificateStep> steps;
    std::string contradiction;
};

struct CertificateFailure : std::runtime_error {
    explicit CertificateFailure(const std::string& what) : std::runtime_error(what) {}
};

// Mechanically replays the elimination over the five 2-dimensional hexagon
// instances that force the contradiction for the rank-3 solutions.
NoBraidingCertificate prove_no_braiding(const AssociatorSet& F);

struct HexInstanceId {
    HexDirection dir;
    size_t x, y, z, t;
};

struct BraidingSearch {
    std::vector<RSymbolSet> braidings;            // fully resolved, re-verified
    std::vector<SolutionFamily> parametric;       // families with free parameters
    std::optional<NoBraidingCertificate> no_braiding;
    std::vector<std::string> log;
    bool empty() const { return braidings.empty() && parametric.empty(); }
};

// Exact sequential elimination over the full hexagon system (both
// orientations, every instance).
BraidingSearch search_braidings(const AssociatorSet& F);

// Elimination restricted to a chosen instance subset (diagnostics; used to
// identify binding constraints).
BraidingSearch solve_hexagon_subsystem(const AssociatorSet& F,
                                       const std::vector<HexInstanceId>& instances);

// Every hexagon instance of the ring with nonzero hom support.
std::vector<HexInstanceId> all_hexagon_instances(const FusionRing& ring);

} // namespace fc
