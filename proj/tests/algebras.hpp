#pragma once

#include "qres/catalog.hpp"

namespace qres::testing {

using qres::a3_zero_relation;
using qres::commutative_square;
using qres::d4_subspace;
using qres::dual_numbers;

}  // namespace qres::testing
