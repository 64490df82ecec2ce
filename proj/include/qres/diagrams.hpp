#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "qres/module.hpp"
#include "qres/shape.hpp"

namespace qres {

// A diagram of shape Q with values in A-modules is a module over the
// category algebra; a morphism of diagrams is a module map.
using Diagram = Module;
using DiagramMap = ModuleMap;

class Setting;
using SettingPtr = std::shared_ptr<const Setting>;

// A shape, a base algebra A and their category algebra.
class Setting {
public:
    // `degrees` is how many homology degrees exactness checks look at for
    // custom shapes; the built-in shapes are 2-periodic and always use 2.
    static SettingPtr create(Shape shape, AlgebraPtr base, std::size_t degrees = 2);

    const Shape& shape() const { return shape_; }
    const AlgebraPtr& base() const { return base_; }
    const AlgebraPtr& lambda() const { return lambda_; }
    Field field() const { return base_->field(); }
    std::size_t object_count() const { return shape_.object_count(); }
    std::size_t base_vertex_count() const { return base_->vertex_count(); }
    std::size_t homology_degrees() const { return degrees_; }

    std::size_t vertex(std::size_t p, std::size_t v) const { return p * base_->vertex_count() + v; }
    std::size_t shape_arrow(std::size_t alpha, std::size_t v) const { return alpha * base_->vertex_count() + v; }
    std::size_t base_arrow(std::size_t p, std::size_t b) const
    {
        return shape_.algebra()->arrows().size() * base_->vertex_count() + p * base_->arrows().size() + b;
    }

    bool owns(const Module& x) const;
    // Throws ShapeMismatch unless x is a diagram in this setting.
    void check(const Module& x) const;
    void check(const ModuleMap& f) const;

    // Copy of a shape path at base vertex v, as a path of the category algebra.
    Path lift(const Path& shape_path, std::size_t v) const;
    // X(beta) for a basis morphism of the shape, as an A-module map between evaluations.
    ModuleMap action(const Diagram& x, std::size_t beta) const;
    // X(g) for g given by coordinates over shape().hom_basis(p, q).
    ModuleMap action(const Diagram& x, const Matrix& coords, std::size_t p, std::size_t q) const;

    // Diagram with the given values at each object and the given A-maps
    // along each generating arrow of the shape.
    Diagram assemble(const std::vector<Module>& values, const std::vector<ModuleMap>& arrows) const;
    DiagramMap assemble_map(const Diagram& source, const Diagram& target, const std::vector<ModuleMap>& parts) const;

private:
    Setting(Shape shape, AlgebraPtr base, AlgebraPtr lambda, std::size_t degrees);

    Shape shape_;
    AlgebraPtr base_;
    AlgebraPtr lambda_;
    std::size_t degrees_;
};

// Evaluation E_q.
Module evaluate(const Setting& s, std::size_t q, const Diagram& x);
ModuleMap evaluate(const Setting& s, std::size_t q, const DiagramMap& f);
// F_q M = Q(q, -) (x) M.
Diagram functor_F(const Setting& s, std::size_t q, const Module& m);
DiagramMap functor_F(const Setting& s, std::size_t q, const ModuleMap& f);
// G_q M = Hom_k(Q(-, q), M).
Diagram functor_G(const Setting& s, std::size_t q, const Module& m);
DiagramMap functor_G(const Setting& s, std::size_t q, const ModuleMap& f);

// Counit F_q E_q X -> X, beta (x) x |-> X(beta) x.
DiagramMap counit(const Setting& s, std::size_t q, const Diagram& x);
// Unit X -> G_q E_q X, x |-> (gamma |-> X(gamma) x).
DiagramMap unit(const Setting& s, std::size_t q, const Diagram& x);
// For mu : M -> E_q X, the adjoint F_q M -> X.
DiagramMap adjoint_of(const Setting& s, std::size_t q, const ModuleMap& mu, const Diagram& x);
// For nu : E_q X -> N, the adjoint X -> G_q N.
DiagramMap coadjoint_of(const Setting& s, std::size_t q, const ModuleMap& nu, const Diagram& x);
// Kernel of the counit at q.
Subobject counit_kernel(const Setting& s, std::size_t q, const Diagram& x);

enum class HomologyMethod {
    // ker X(d^a) / im X(d^(N-a)) along the generating arrows.
    Amplitude,
    // Cohomology of Hom(P, X) for the minimal projective resolution P of the
    // simple functor at q.
    Ext,
    // Both, with any disagreement raised as an Internal error.
    Checked,
};

// The A-module complex C -> D -> E whose middle homology is H^i_q.
struct HomologyComplex {
    ModuleMap in;
    ModuleMap out;
};
HomologyComplex homology_complex(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                                 HomologyMethod method);

struct Homology {
    Module module;
    // Middle term of the complex, with cycles inside it and the projection
    // from cycles onto homology.
    Module middle;
    Subobject cycles;
    std::vector<Matrix> boundaries;
    Quotient projection;
};
Homology homology_data(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                       HomologyMethod method = HomologyMethod::Checked);
Module homology(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                HomologyMethod method = HomologyMethod::Checked);
ModuleMap homology_map(const Setting& s, std::size_t q, std::size_t degree, const DiagramMap& f,
                       HomologyMethod method = HomologyMethod::Checked);

bool is_exact(const Setting& s, const Diagram& x);
bool is_weak_equivalence(const Setting& s, const DiagramMap& f);
// Every evaluation is an injective A-module. Requires an acyclic base quiver.
bool is_semiinjective(const Setting& s, const Diagram& x);
bool is_injective_object(const Setting& s, const Diagram& x);

std::vector<DiagramMap> hom_space(const Setting& s, const Diagram& x, const Diagram& y);

// Hom(X, Y) modulo maps factoring through an injective object. Such maps
// are exactly those extending along the injective envelope of X.
struct HomModInjectives {
    std::size_t dimension = 0;
    // Maps whose classes form a basis of the quotient.
    std::vector<DiagramMap> representatives;
    // Spanning set of the maps equivalent to zero.
    std::vector<DiagramMap> null_maps;
    DiagramMap envelope;
};
HomModInjectives hom_mod_injectives(const Setting& s, const Diagram& x, const Diagram& y);
// h with f = h * envelope, when f factors through an injective object.
std::optional<DiagramMap> null_witness(const Setting& s, const DiagramMap& f, const DiagramMap& envelope);
// Independent count: maps through each indecomposable injective of the
// category algebra, spanned by composites of basis maps.
std::size_t null_dimension_by_injectives(const Setting& s, const Diagram& x, const Diagram& y);

}  // namespace qres
