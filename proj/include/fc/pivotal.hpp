#pragma once

#include "fc/rigidity.hpp"

#include <optional>

namespace fc {

// The bending map on the direct sum of all (2,1)-stranded morphism spaces:
// a basis vector of V^z_{xy} is sent into V^{y*}_{z*x} through the block
// death_z * birth_y * snake(y) * a^1_{z*,x,y}. Unit-involving spaces are
// included; their blocks come from implicit identity associators.
struct BendingMatrix {
    struct Slot {
        size_t x, y, z;   // the space V^z_{xy}
        size_t index;     // multiplicity index
    };
    std::vector<Slot> basis;
    Mat<Cyclotomic> mat;

    size_t position(size_t x, size_t y, size_t z, size_t index) const;
};

BendingMatrix build_B(const AssociatorSet& F, const RigidityStructure& R);

// t-coefficients of a pivotal structure: t_unit = 1, t_x t_{x*} = 1 and
// t_x t_y = t_z on the fusion support.
struct PivotalStructure {
    std::vector<Cyclotomic> t;  // per strand
};

struct PivotalAnalysis {
    bool pivotal = false;
    std::vector<PivotalStructure> structures;
    std::string obstruction;  // set when not pivotal
    Mat<Cyclotomic> b_cubed;
};

// Computes B^3 and solves for all coherent t families reproducing its
// eigenvalue pattern; reports the offending entry or coherence triple
// otherwise. Candidate scalars are the roots of unity of Q(zeta_12).
PivotalAnalysis pivotal_structures(const AssociatorSet& F, const RigidityStructure& R);

struct NotSelfDual : std::invalid_argument {
    explicit NotSelfDual(const std::string& label)
        : std::invalid_argument("strand " + label + " is not self-dual") {}
};

// Frobenius-Schur indicator of a self-dual strand: t_x, guaranteed +-1.
Cyclotomic fs_indicator(const PivotalStructure& P, const FusionRing& ring, size_t x);

// (tr_r, tr_l) of coeff * Id_strand.
std::pair<Cyclotomic, Cyclotomic> traces(const AssociatorSet& F, const RigidityStructure& R,
                                         const PivotalStructure& P, size_t strand,
                                         const Cyclotomic& coeff = Cyclotomic(1));

struct SphericalReport {
    bool spherical = false;
    std::vector<std::pair<Cyclotomic, Cyclotomic>> strand_traces;  // (tr_r, tr_l) of Id
    std::optional<bool> self_dual_shortcut;  // set when every strand is self-dual
};

SphericalReport spherical_check(const AssociatorSet& F, const RigidityStructure& R,
                                const PivotalStructure& P);

} // namespace fc
