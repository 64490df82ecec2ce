#pragma once

#include <string>
#include <vector>

#include "qres/algebra.hpp"

namespace qres {

// Subspace orientation of D4: three leaves mapping to a center.
AlgebraPtr d4_subspace(Field f);
// 1 -> 2 -> 3 with the composite set to zero.
AlgebraPtr a3_zero_relation(Field f);
// k[x]/(x^2) as a one-loop quiver.
AlgebraPtr dual_numbers(Field f);
// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4.
AlgebraPtr commutative_square(Field f);

// "k", "A<n>", "D4", "A3/rad2", "dual", "square".
AlgebraPtr named_algebra(const std::string& name, Field f);
std::vector<std::string> algebra_names();

}  // namespace qres
