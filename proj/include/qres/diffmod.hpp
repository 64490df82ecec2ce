#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "qres/diagrams.hpp"
#include "qres/rng.hpp"

namespace qres {

// A module with an A-linear endomorphism squaring to zero.
class DifferentialModule {
public:
    DifferentialModule() = default;
    explicit DifferentialModule(ModuleMap differential);

    // (M, 0).
    static DifferentialModule trivial(const Module& m);

    const Module& underlying() const { return d_.source(); }
    const ModuleMap& differential() const { return d_; }
    const AlgebraPtr& algebra_ptr() const { return d_.source().algebra_ptr(); }
    Field field() const { return d_.field(); }
    std::size_t total_dim() const { return underlying().total_dim(); }
    bool is_zero() const { return underlying().is_zero(); }

    friend bool operator==(const DifferentialModule& a, const DifferentialModule& b);

private:
    ModuleMap d_;
};

// f with f * d = d' * f.
bool is_chain_map(const ModuleMap& f, const DifferentialModule& d, const DifferentialModule& e);

// Differential modules are the diagrams of the one-loop shape.
SettingPtr loop_setting(const AlgebraPtr& base);
Diagram to_diagram(const Setting& s, const DifferentialModule& d);
DifferentialModule from_diagram(const Setting& s, const Diagram& x);
DiagramMap to_diagram_map(const Setting& s, const ModuleMap& f, const DifferentialModule& d,
                          const DifferentialModule& e);
ModuleMap from_diagram_map(const Setting& s, const DiagramMap& f);

// Cycles Z = ker d, boundaries B = im d and H = Z / B with projection zeta.
struct BZHData {
    Subobject cycles;
    Subobject boundaries;
    ModuleMap boundaries_in_cycles;
    Quotient homology;
};
BZHData bzh(const DifferentialModule& d);

struct BZHMaps {
    ModuleMap cycles;
    ModuleMap boundaries;
    ModuleMap homology;
};
// Maps induced by a chain map on cycles, boundaries and homology, relative
// to the bases chosen by bzh.
BZHMaps bzh_map(const ModuleMap& f, const DifferentialModule& d, const DifferentialModule& e);
Module homology(const DifferentialModule& d);
ModuleMap homology_map(const ModuleMap& f, const DifferentialModule& d, const DifferentialModule& e);
bool is_quasi_isomorphism(const ModuleMap& f, const DifferentialModule& d, const DifferentialModule& e);

// 0 -> (Z, 0) -> (M, d) -> (B, 0) -> 0.
struct CanonicalSequence {
    DifferentialModule cycles;
    DifferentialModule middle;
    DifferentialModule boundaries;
    ModuleMap inclusion;
    ModuleMap onto_boundaries;
};
CanonicalSequence canonical_sequence(const DifferentialModule& d);

// A monic quasi-isomorphism (H, 0) -> (M, d) built from a splitting p of
// B -> Z and the pushout of (Z, 0) -> (M, d) along p.
struct EtaEmbedding {
    ModuleMap splitting;
    DifferentialModule pushout;
    ModuleMap to_pushout;
    DifferentialModule source;
    ModuleMap eta;
};
// nullopt when B -> Z has no A-linear retraction.
std::optional<EtaEmbedding> try_eta_embedding(const DifferentialModule& d);
// Throws SequenceDoesNotSplit instead of returning nullopt.
EtaEmbedding eta_embedding(const DifferentialModule& d);

struct DiffCertificates {
    bool morphism = false;
    bool quasi_isomorphism = false;
    bool injective = false;
    bool socle_in_cycles = false;
    bool no_exact_summand = false;

    bool all() const { return morphism && quasi_isomorphism && injective && socle_in_cycles && no_exact_summand; }
};

struct DiffResolution {
    DifferentialModule source;
    DifferentialModule target;
    ModuleMap map;
    DiffCertificates certificates;
};

// Minimal semiinjective resolution over a hereditary base. With
// 0 -> H -> I0 -> I1 -> 0 the minimal injective resolution of H(M), the
// target is I0 (+) I1 with d(x, y) = (0, d0 x).
DiffResolution resolve_min_diff(const DifferentialModule& d, std::uint64_t seed = 0);
// Recomputes all five certificates for a candidate resolution.
DiffCertificates certify_diff_resolution(const DifferentialModule& source, const DifferentialModule& target,
                                         const ModuleMap& map, std::uint64_t seed = 0);

// socle(J) inside ker d.
bool socle_in_cycles(const DifferentialModule& d);
// Some indecomposable summand of the loop diagram is exact. Prime fields only.
bool has_exact_summand(const DifferentialModule& d, std::uint64_t seed = 0);
// Underlying module injective; with an acyclic base this is Gorenstein
// injectivity in Diff(A).
bool is_gorenstein_injective_diff(const DifferentialModule& d);
// Injective underlying module and no exact summand. Over the rationals the
// summand test is replaced by the socle criterion.
bool is_minimal_gorenstein_injective(const DifferentialModule& d, std::uint64_t seed = 0);

Module rz_H(const DifferentialModule& d, std::uint64_t seed = 0);
DifferentialModule rz_K(const Module& m, std::uint64_t seed = 0);

// f = d' s + s d for some A-linear s.
std::optional<ModuleMap> classical_null_homotopy(const ModuleMap& f, const DifferentialModule& d,
                                                 const DifferentialModule& e);
struct NullHomotopyComparison {
    bool classical = false;
    // f factors through an injective object of Diff(A).
    bool through_injectives = false;
};
NullHomotopyComparison compare_null_homotopy(const ModuleMap& f, const DifferentialModule& d,
                                             const DifferentialModule& e);

// Either a random loop diagram over the category algebra or a hidden
// U (+) V with d = [[0, 0], [h, 0]] plus a zero-differential part.
DifferentialModule random_differential_module(const AlgebraPtr& a, Rng& rng, std::size_t max_total);

}  // namespace qres
