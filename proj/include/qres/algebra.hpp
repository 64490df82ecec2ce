#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qres/matrix.hpp"

namespace qres {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

// A path in traversal order: arrows[0] leaves `source`.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

struct RelationTerm {
    Scalar coeff;
    std::vector<std::size_t> arrows;
};
using Relation = std::vector<RelationTerm>;

class QuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

// Bound quiver algebra kQ/I for an admissible ideal I given by relations.
// The path basis is computed by truncating at a length T past which every
// path lies in I, then reducing modulo the generated ideal; basis paths are
// ordered by length, then lexicographically by arrow index.
class QuiverAlgebra {
public:
    struct ArrowSpec {
        std::string name;
        std::string source;
        std::string target;
    };
    struct TermSpec {
        long long coeff;
        std::vector<std::string> path;
    };

    static AlgebraPtr create(Field field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                             std::vector<Relation> relations = {}, std::size_t max_length = 16);
    static AlgebraPtr create(Field field, std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
                             const std::vector<std::vector<TermSpec>>& relations = {}, std::size_t max_length = 16);

    QuiverAlgebra(const QuiverAlgebra&) = delete;
    QuiverAlgebra& operator=(const QuiverAlgebra&) = delete;

    Field field() const { return field_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t vertex_index(const std::string& name) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t arrow_index(const std::string& name) const;
    const std::vector<Relation>& relations() const { return relations_; }
    const std::vector<std::size_t>& arrows_out(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& arrows_in(std::size_t v) const { return in_[v]; }

    bool is_acyclic() const { return acyclic_; }
    // Every path of this length or longer lies in the ideal.
    std::size_t vanishing_length() const { return vanishing_length_; }

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    // Indices of basis paths from u to w, in basis order.
    const std::vector<std::size_t>& basis_between(std::size_t u, std::size_t w) const
    {
        return between_[u * vertices_.size() + w];
    }
    // Position of basis path `index` inside basis_between(source, target).
    std::size_t local_index(std::size_t index) const { return local_index_[index]; }
    std::size_t trivial_path(std::size_t v) const { return trivial_[v]; }
    // Normal form of an arbitrary path as a column over the basis.
    Matrix normal_form(const Path& path) const;
    // Column b holds the normal form of (basis path b)·arrow.
    const Matrix& right_action(std::size_t arrow) const { return right_action_[arrow]; }

    AlgebraPtr opposite() const;
    // Structural identity; algebras with equal fingerprints are interchangeable.
    const std::string& fingerprint() const { return fingerprint_; }
    bool same_as(const QuiverAlgebra& other) const { return fingerprint_ == other.fingerprint_; }

    std::string path_name(const Path& path) const;

private:
    QuiverAlgebra(Field field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                  std::vector<Relation> relations);
    void validate() const;
    void compute_basis(std::size_t max_length);

    Field field_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    bool acyclic_ = true;
    std::size_t vanishing_length_ = 0;

    std::vector<Path> paths_;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_index_;
    Matrix normal_forms_;
    std::vector<Path> basis_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> local_index_;
    std::vector<std::size_t> trivial_;
    std::vector<Matrix> right_action_;
    std::string fingerprint_;

    mutable std::once_flag opposite_once_;
    mutable AlgebraPtr opposite_;
};

// Linear quiver 1 -> 2 -> ... -> n with arrows a1, ..., a(n-1).
AlgebraPtr linear_quiver(Field field, std::size_t n);
// One vertex, no arrows: the ground field as an algebra.
AlgebraPtr field_algebra(Field field);

}  // namespace qres
