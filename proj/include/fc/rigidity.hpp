#pragma once

#include "fc/associator.hpp"

namespace fc {

struct ZeroCorner : std::domain_error {
    explicit ZeroCorner(const std::string& label)
        : std::domain_error("unit-channel corner of a^" + label + " vanishes; no rigidity from "
                            "this construction") {}
};

struct NoSquareRootInField : std::runtime_error {
    explicit NoSquareRootInField(const std::string& what) : std::runtime_error(what) {}
};

// Birth/death coefficients per strand: d_x = death_x * v^1_{x*x} and
// b_x = birth_x * (dual vector of v^1_{x x*}).
struct RigidityStructure {
    std::vector<Cyclotomic> birth, death;
};

// death = 1, birth = 1 / corner, where corner is the unit-channel entry of
// a^x_{x,x*,x}.
RigidityStructure build_rigidity(const AssociatorSet& F);

// Exact (right, left) zig-zag scalars per strand; both equal 1 iff the
// structure is a rigidity.
std::vector<std::pair<Cyclotomic, Cyclotomic>> snake_check(const AssociatorSet& F,
                                                           const RigidityStructure& R);

// Right-dual expansion of the basis vector v^z_{xy}[index] over the basis of
// the bent space V^{y*}_{z*x} (one application of the bending map).
std::vector<Cyclotomic> dual_on_basis(const AssociatorSet& F, const RigidityStructure& R,
                                      size_t x, size_t y, size_t z, size_t index);

// Double dual on V^z_{xy} (three bends).
std::vector<Cyclotomic> double_dual_on_basis(const AssociatorSet& F, const RigidityStructure& R,
                                             size_t x, size_t y, size_t z, size_t index);

// Right and left pseudo-traces of Id_z.
std::pair<Cyclotomic, Cyclotomic> pseudo_traces(const RigidityStructure& R, const FusionRing& ring,
                                                size_t z);

// Rescales (birth, death) by (c, 1/c) per dual pair so that the two
// pseudo-traces agree on every strand.
RigidityStructure balance_pseudo_traces(const AssociatorSet& F, const RigidityStructure& R);

// After balancing: the sixth power of the bending map is the identity.
bool quadruple_dual_check(const AssociatorSet& F, const RigidityStructure& R);

} // namespace fc
