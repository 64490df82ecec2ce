#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qres/algebra.hpp"

namespace qres {

class Rng;

// A finite-dimensional representation of a bound quiver: one space per
// vertex and one matrix per arrow, satisfying the relations.
class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps);

    static Module zero(AlgebraPtr algebra);

    const QuiverAlgebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    Field field() const { return algebra_->field(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& arrow(std::size_t a) const { return arrows_[a]; }
    const std::vector<Matrix>& arrow_maps() const { return arrows_; }

    // Action of a path (traversal order) as a dims[target] x dims[source] matrix.
    Matrix path_action(const Path& path) const;
    // Action of an algebra element given as a column over the basis of
    // paths from u to w.
    Matrix element_action(const Matrix& coords, std::size_t u, std::size_t w) const;

    friend bool operator==(const Module& a, const Module& b);

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> arrows_;
};

class ModuleMap {
public:
    ModuleMap() = default;
    // Checks shapes and that the components intertwine the arrow actions.
    ModuleMap(Module source, Module target, std::vector<Matrix> components);

    static ModuleMap zero(const Module& source, const Module& target);
    static ModuleMap identity(const Module& m);
    // Interprets a flattened column (see flatten()) as a map.
    static ModuleMap from_flat(const Module& source, const Module& target, const Matrix& column);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    Field field() const { return source_.field(); }
    const Matrix& component(std::size_t v) const { return components_[v]; }
    const std::vector<Matrix>& components() const { return components_; }

    ModuleMap operator+(const ModuleMap& other) const;
    ModuleMap operator-(const ModuleMap& other) const;
    ModuleMap scaled(const Scalar& s) const;
    // (g * f) is g after f.
    ModuleMap operator*(const ModuleMap& f) const;

    // Concatenation of the row-major components, vertex by vertex.
    Matrix flatten() const;
    std::size_t rank() const;
    bool is_zero() const;
    bool is_mono() const;
    bool is_epi() const;
    bool is_iso() const;
    std::optional<ModuleMap> inverse() const;

    friend bool operator==(const ModuleMap& a, const ModuleMap& b);

private:
    struct Unchecked {};
    ModuleMap(Unchecked, Module source, Module target, std::vector<Matrix> components);
    friend ModuleMap make_map_unchecked(Module, Module, std::vector<Matrix>);

    Module source_;
    Module target_;
    std::vector<Matrix> components_;
};

// Skips the intertwining check; for maps correct by construction.
ModuleMap make_map_unchecked(Module source, Module target, std::vector<Matrix> components);

bool same_algebra(const Module& a, const Module& b);

struct DirectSum {
    Module sum;
    std::vector<ModuleMap> injections;
    std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts);
ModuleMap direct_sum_map(const DirectSum& source, const DirectSum& target, const std::vector<ModuleMap>& parts);
// The map from a direct sum whose restriction to part i is maps[i].
ModuleMap copair(const DirectSum& source, const std::vector<ModuleMap>& maps);
// The map into a direct sum whose component i is maps[i].
ModuleMap pair(const DirectSum& target, const std::vector<ModuleMap>& maps);

struct Subobject {
    Module module;
    ModuleMap inclusion;
};
struct Quotient {
    Module module;
    ModuleMap projection;
    // Per vertex, a linear section of the projection.
    std::vector<Matrix> sections;
};

// Submodule spanned at each vertex by the given columns, which must be
// closed under the arrows. Bases are canonicalized.
Subobject submodule(const Module& m, const std::vector<Matrix>& spans);
// Smallest submodule containing the given vectors.
Subobject generated_submodule(const Module& m, const std::vector<Matrix>& generators);
Quotient quotient(const Module& m, const std::vector<Matrix>& spans);
Subobject kernel(const ModuleMap& f);
Subobject image(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);
// Subspaces per vertex, as canonical column bases.
std::vector<Matrix> image_spaces(const ModuleMap& f);
bool contains(const std::vector<Matrix>& outer, const std::vector<Matrix>& inner);

// u with mono * u = f; f must land in the image of mono.
ModuleMap lift_through_mono(const ModuleMap& f, const ModuleMap& mono);
// Some g : mono.target() -> target with g * mono = h, if one exists.
std::optional<ModuleMap> extend_along(const ModuleMap& mono, const ModuleMap& h, const Module& target);

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
// Linear combination sum c_i basis_i, with coefficients in a column.
ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coeffs, const Module& source,
                  const Module& target);
ModuleMap random_combination(const std::vector<ModuleMap>& basis, const Module& source, const Module& target,
                             Rng& rng);
// Solves sum c_i images_i = rhs for c, where images_i are flattened maps.
std::optional<Matrix> solve_combination(const std::vector<Matrix>& images, const Matrix& rhs);

Subobject radical(const Module& m);
Subobject socle(const Module& m);
Quotient top(const Module& m);

// D M = Hom_k(M, k) as a module over the opposite algebra (or over a
// structurally equal algebra given explicitly).
Module dual(const Module& m);
Module dual(const Module& m, const AlgebraPtr& over);
// D f : D N -> D M for f : M -> N.
ModuleMap dual(const ModuleMap& f, const Module& dual_target, const Module& dual_source);

Module projective(const AlgebraPtr& algebra, std::size_t v);
Module injective(const AlgebraPtr& algebra, std::size_t v);
Module simple(const AlgebraPtr& algebra, std::size_t v);
// The map P(v) -> M sending the trivial path to the given vector of M_v.
ModuleMap map_from_projective(const Module& pv, std::size_t v, const Module& m, const Matrix& element);

struct Cover {
    ModuleMap map;
    // Vertex of each indecomposable summand, in order.
    std::vector<std::size_t> vertices;
};
// Projective cover P -> M with P a direct sum of P(v), one per top basis vector.
Cover projective_cover(const Module& m);
// Injective envelope M -> E with E a direct sum of I(v), one per socle basis vector.
Cover injective_envelope(const Module& m);
Subobject syzygy(const Module& m);

bool is_essential(const ModuleMap& mono);
bool is_injective(const Module& m);
bool is_projective(const Module& m);
bool is_hereditary(const AlgebraPtr& algebra);

struct InjectiveResolution {
    ModuleMap coaugmentation;
    std::vector<Module> terms;
    std::vector<ModuleMap> differentials;
};
// Minimal injective resolution; the quiver must be acyclic.
InjectiveResolution min_injective_resolution(const Module& m);

// dim Ext^i(M, N) by dimension shifting through projective covers.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t degree);

}  // namespace qres
