#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qres/diagrams.hpp"
#include "qres/rng.hpp"

namespace qres {

struct ResolutionFlags {
    bool weak_equivalence = false;
    bool semiinjective = false;
    bool minimal = false;

    bool all() const { return weak_equivalence && semiinjective && minimal; }
};

struct Resolution {
    Diagram source;
    Diagram target;
    DiagramMap map;
    ResolutionFlags certified;
};

// I = I' (+) J' with J' an injective object and I' minimal semiinjective.
struct InjectiveSplit {
    Diagram minimal;
    Diagram injective;
    // I -> I' (+) J'.
    DiagramMap iso;
    // Projection I -> I'.
    DiagramMap to_minimal;
};
InjectiveSplit split_injective_part(const Setting& s, const Diagram& i, std::uint64_t seed = 0);

// No indecomposable summand is exact. For the loop shape the answer is
// cross-checked against the socle criterion and a disagreement throws.
bool is_minimal_semiinjective(const Setting& s, const Diagram& i, std::uint64_t seed = 0);
// Loop shape only: socle(E_0 I) lies in the kernel of the differential.
bool loop_socle_criterion(const Setting& s, const Diagram& i);

struct ResolveOptions {
    std::uint64_t seed = 0;
    // Cosyzygy steps tried before giving up on a termwise injective one.
    std::size_t bound = 3;
};
// Loop shape over a hereditary base goes through differential modules.
// Otherwise x is coresolved by injective objects until a cosyzygy is
// termwise injective, and special preenvelopes are pulled back down to x.
Resolution resolve_min(const Setting& s, const Diagram& x, const ResolveOptions& options = {});
// Recomputes all flags of a resolution from scratch.
ResolutionFlags certify_resolution(const Setting& s, const Resolution& r, std::uint64_t seed = 0);
// x -> I with I termwise injective and exact cokernel; not minimal.
DiagramMap semiinjective_preenvelope(const Setting& s, const Diagram& x, std::size_t bound);

// i with i * r.map - r2.map = h * envelope(x).
struct Comparison {
    DiagramMap iso;
    DiagramMap homotopy;
    DiagramMap envelope;
};
Comparison comparison_iso(const Setting& s, const Resolution& r, const Resolution& r2);
bool verify_comparison(const Setting& s, const Resolution& r, const Resolution& r2, const Comparison& c);

// g with g * f = 1 for a weak equivalence f out of a minimal semiinjective object.
DiagramMap check_weq_splits(const Setting& s, const DiagramMap& f, std::uint64_t seed = 0);

struct HomInDerived {
    std::size_t dimension = 0;
    std::vector<DiagramMap> representatives;
    Resolution resolution;
};
HomInDerived hom_in_derived(const Setting& s, const Diagram& x, const Diagram& y, std::uint64_t seed = 0);

// A simple submodule of E_q I whose adjoint F_q S -> I is injective. Every
// line in the socle is tried, so this is exhaustive over prime fields.
std::optional<Matrix> find_mono_adjoint_line(const Setting& s, const Diagram& i, std::size_t q);
// Same search through the criterion Im(F_q mu) meets Z_q I trivially.
std::optional<Matrix> find_counit_kernel_line(const Setting& s, const Diagram& i, std::size_t q);

// Quotient of a sum of injective objects by a random subobject, plus
// optional injective summands, hidden behind a random automorphism. The
// base must be hereditary so that quotients stay termwise injective.
Diagram random_semiinjective(const Setting& s, Rng& rng, std::size_t max_total);
// Same source, different basis: r.map followed by a random automorphism of the target.
Resolution rebase(const Setting& s, const Resolution& r, Rng& rng);

}  // namespace qres
