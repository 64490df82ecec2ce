#pragma once

#include <cstddef>
#include <utility>

#include "qres/module.hpp"
#include "qres/rng.hpp"

namespace qres {

// Random module of total dimension at most max_total. Without relations the
// arrow matrices are uniform; with relations the module is a quotient of a
// sum of projectives or a submodule of a sum of injectives.
Module random_module(const AlgebraPtr& algebra, Rng& rng, std::size_t max_total);
// Submodule generated by a few random vectors.
Subobject random_submodule(const Module& m, Rng& rng, std::size_t generators = 1);
// The same module written in random bases, with the isomorphism m -> m'.
std::pair<Module, ModuleMap> random_rebase(const Module& m, Rng& rng);
// Uniform element of Hom(m, n).
ModuleMap random_hom(const Module& m, const Module& n, Rng& rng);

}  // namespace qres
