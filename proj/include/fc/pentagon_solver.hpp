#pragma once

#include "fc/associator.hpp"
#include "fc/poly.hpp"

#include <optional>

namespace fc {

struct EigenvaluesOutsideField : std::runtime_error {
    EigenvaluesOutsideField()
        : std::runtime_error("characteristic polynomial does not split over Q(zeta_12)") {}
};

// Gauge-invariant fingerprint of a solution for the rank-3 ring: the
// unordered eigenvalue pair of a^1_{x,x,x} (carried exactly through its
// characteristic polynomial), the (1,1) entry of a^x_{x,x,x} and the signs
// (g, h) = (a^x_{y,x,y}, a^1_{y,x,x}).
struct GaugeInvariants {
    Cyclotomic eig_trace, eig_det;  // lambda^2 - trace lambda + det
    std::optional<std::pair<Cyclotomic, Cyclotomic>> eig1;  // explicit pair when it splits
    Cyclotomic corner;
    Cyclotomic g, h;

    friend bool operator==(const GaugeInvariants& a, const GaugeInvariants& b) {
        return a.eig_trace == b.eig_trace && a.eig_det == b.eig_det && a.corner == b.corner &&
               a.g == b.g && a.h == b.h;
    }
    std::string to_string() const;
};

GaugeInvariants invariants(const AssociatorSet& F);

// Explicit eigenvalues of a^1_{x,x,x}; throws when the characteristic
// polynomial does not split over the field (diagnostic use).
std::pair<Cyclotomic, Cyclotomic> eigenvalue_pair(const AssociatorSet& F);

// --- stage 1: the ten 1-dimensional associator scalars ----------------------

struct OneDimBranch {
    Cyclotomic g, h;
    std::map<AssocKey, Cyclotomic> scalars;  // all ten 1-dim associators
};

struct OneDimStage {
    std::vector<OneDimBranch> branches;  // the four sign choices
    std::vector<std::string> verified;   // relations checked symbolically
};

OneDimStage solve_1dim();

// --- stage 2: 2x2 shapes, sign fixing, branch pruning ------------------------

struct PrunedBranch {
    std::string branch;
    std::string witness;
};

struct TwoDimBranch {
    Cyclotomic b;                  // B = [[0,b],[1/b,0]]; f normalized to 1
    Mat<Cyclotomic> A, B, F;
    // Phi solution space of the Phi-linear 6-dim instances:
    // Phi = sum_k alpha_k K_k
    std::vector<Mat<Cyclotomic>> phi_kernel;
};

struct TwoDimStage {
    std::vector<PrunedBranch> pruned;
    std::vector<TwoDimBranch> surviving;  // one per b in {i, -i}
    std::vector<std::string> log;
};

TwoDimStage solve_2dim(const OneDimStage& stage1);

// --- stage 3: the 16-dimensional instance and the final parameters ----------

struct SolvedCategory {
    AssociatorSet F;
    Cyclotomic b, phi, d, w, y, z;
    std::vector<std::string> derivation;
};

// Full pipeline. Returns exactly the gauge-inequivalent solutions, each
// re-verified against every pentagon instance; deterministic order with the
// (b = i, phi = (-1+sqrt3)/2) solution first.
std::vector<SolvedCategory> solve_pentagon();

// sigma_k images for k in 1, 5, 7, 11, pentagon-verified.
std::vector<AssociatorSet> galois_orbit(const AssociatorSet& F);

// --- gauge equivalence -------------------------------------------------------

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Gauge> gauge;   // present when equivalent
    std::string certificate;      // differing invariant, or the found gauge
};

// Searches the full parametric gauge family of the rank-3 ring (five scalars
// and one 2x2 block) by exact elimination.
EquivalenceResult equivalent(const AssociatorSet& F1, const AssociatorSet& F2);

} // namespace fc
