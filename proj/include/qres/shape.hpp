#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qres/module.hpp"

namespace qres {

enum class ShapeKind { Loop, Cyclic, Custom };

// A finite shape category presented as a bound quiver: objects are its
// vertices, Q(p, q) is spanned by the basis paths from p to q, and
// composition is concatenation followed by reduction.
class Shape {
public:
    // One object q with Q(q, q) = span{id, d} and d*d = 0.
    static Shape loop(Field field);
    // Objects 0..m-1, arrows d_p : p -> p+1 (mod m), N consecutive arrows compose to zero.
    static Shape cyclic(Field field, std::size_t m, std::size_t n);
    // A user-supplied finite shape. The Serre permutation is found from the
    // dimension duality (or checked against it when given); other setup
    // conditions are recorded as asserted, not verified.
    static Shape custom(AlgebraPtr category, std::optional<std::vector<std::size_t>> serre = std::nullopt);

    ShapeKind kind() const { return kind_; }
    std::size_t period() const { return m_; }
    std::size_t nilpotency() const { return n_; }
    bool is_loop() const { return kind_ == ShapeKind::Loop; }
    bool is_builtin() const { return kind_ != ShapeKind::Custom; }
    // Whether the setup conditions beyond dimension duality were checked.
    bool conditions_verified() const { return kind_ != ShapeKind::Custom; }
    std::string describe() const;

    const AlgebraPtr& algebra() const { return algebra_; }
    Field field() const { return algebra_->field(); }
    std::size_t object_count() const { return algebra_->vertex_count(); }
    const std::vector<std::string>& objects() const { return algebra_->vertices(); }
    std::size_t object_index(const std::string& name) const;

    // Basis of Q(p, q) as indices into the path basis of algebra().
    const std::vector<std::size_t>& hom_basis(std::size_t p, std::size_t q) const;
    std::size_t hom_dim(std::size_t p, std::size_t q) const { return hom_basis(p, q).size(); }
    // Non-identity basis morphisms p -> q; they span the pseudoradical.
    std::vector<std::size_t> pseudoradical_basis(std::size_t p, std::size_t q) const;
    // Coordinates over hom_basis(p, r) of (h after g) for basis morphisms
    // g : p -> q and h : q -> r.
    Matrix compose(std::size_t g, std::size_t h) const;

    std::size_t serre(std::size_t p) const { return serre_[p]; }
    const std::vector<std::size_t>& serre_map() const { return serre_; }
    bool dimension_duality_holds(const std::vector<std::size_t>& permutation) const;

private:
    Shape(ShapeKind kind, std::size_t m, std::size_t n, AlgebraPtr algebra);
    void check_object(std::size_t p) const;

    ShapeKind kind_;
    std::size_t m_;
    std::size_t n_;
    AlgebraPtr algebra_;
    std::vector<std::size_t> serre_;
};

// Lambda = (category algebra of the shape) tensor A. Vertex (p, v) has index
// p * |A-vertices| + v; shape arrow alpha at v has index alpha * |A-vertices| + v;
// A-arrow a at object p follows, at index (#shape arrows)(|A-vertices|) + p * |A-arrows| + a.
AlgebraPtr category_algebra(const Shape& shape, const AlgebraPtr& base);

// Minimal projective resolution of the simple functor at an object.
struct StalkTerm {
    // Object of each representable summand Q(o, -).
    std::vector<std::size_t> objects;
    // Map to the previous term (the stalk itself for the first term).
    ModuleMap map;
};
struct StalkResolution {
    Module stalk;
    std::vector<StalkTerm> terms;
};
StalkResolution stalk_resolution(const Shape& shape, std::size_t object, std::size_t length);

}  // namespace qres
