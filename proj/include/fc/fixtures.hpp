#pragma once

#include "fc/associator.hpp"

namespace fc::fixtures {

// Named constants of the rank-3 solution, as exact field elements.
Cyclotomic phi_value();     // (-1+sqrt3)/2
Cyclotomic d_value();       // (1/sqrt2) e^{7 pi i/12} = (-z + z^2 + z^3)/2
Cyclotomic w_value();       // ((1-sqrt3)/4) e^{2 pi i/3}
Cyclotomic y_value();       // (e^{-pi i/3} + i)/2
Cyclotomic z_value();       // (1/2) e^{5 pi i/6}

// The explicit rank-3 associator set, transcribed matrix by matrix.
AssociatorSet rank3_solution();

// Assembles the full associator set of the rank-3 family from the solved
// parameters (signs g = -1, h = 1 and the normalized shapes are built in).
AssociatorSet solution_from_params(const Cyclotomic& b, const Cyclotomic& phi,
                                   const Cyclotomic& d, const Cyclotomic& w, const Cyclotomic& y,
                                   const Cyclotomic& z);

// Trivial rank-1 associator set (all matrices [1]).
AssociatorSet trivial_solution();

// Pointed Z_n set with trivial associators.
AssociatorSet pointed_cyclic_solution(size_t n);

} // namespace fc::fixtures
