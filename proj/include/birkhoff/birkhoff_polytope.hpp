#pragma once

#include "birkhoff/combinatorics.hpp"
#include "birkhoff/geometry.hpp"
#include "birkhoff/slicing_basis.hpp"

namespace birkhoff {

/// B_n as a V-polytope in R^(n^2): the n! vectorized permutation matrices in
/// lexicographic order, with the combinatorial edge list (single-cycle
/// adjacency).
VPolytope birkhoff_polytope(int n);

/// vec(V_n), the covector defining the slicing hyperplanes.
VectorXz birkhoff_slicing_functional(int n);

/// Chart on aff(B_n) whose first coordinate is vec(V_n) up to the shift that
/// puts the lowest vertex at level 0.
LatticeChart birkhoff_chart(int n);

}  // namespace birkhoff
