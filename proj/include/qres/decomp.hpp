#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qres/module.hpp"

namespace qres {

std::vector<ModuleMap> end_ring_basis(const Module& m);

// M = ker f^n (+) im f^n for an endomorphism f, n = dim M.
struct FittingSplit {
    Subobject kernel;
    Subobject image;
    // Projections with kernel_projection * kernel.inclusion = 1 and
    // image_projection * image.inclusion = 1.
    ModuleMap kernel_projection;
    ModuleMap image_projection;
};
FittingSplit fitting_split(const Module& m, const ModuleMap& f);

struct Summand {
    Module module;
    ModuleMap inclusion;
    ModuleMap projection;
};
struct Decomposition {
    std::vector<Summand> summands;
    // The isomorphism from the direct sum of the summands onto the module.
    ModuleMap witness;
};

// Krull-Schmidt decomposition over a prime field. Each summand carries a
// certificate that its endomorphism ring is local: the ideal J generated by
// commutators of an End-basis and nilpotent parts of basis elements is
// nilpotent, and End/J is a field generated by one element.
Decomposition indecomposables(const Module& m, std::uint64_t seed, std::size_t retries = 64);
// The local-ring certificate alone. False means it could not be established
// with the given budget, which does not prove decomposability.
bool certify_local_endomorphisms(const Module& m, std::uint64_t seed, std::size_t retries = 64);
// Verifies the witness identities of a decomposition.
bool verify_decomposition(const Module& m, const Decomposition& d);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Unknown };
struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Unknown;
    std::optional<ModuleMap> iso;
    std::string reason;
};
// Over a prime field the answer is always definite: random elements of
// Hom(M, N) are tried first, then indecomposable summands are matched.
// Over the rationals only the random search and dimension obstructions are
// available, so the verdict may be Unknown.
IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, std::size_t retries = 64);

}  // namespace qres
