#include "qres/shape.hpp"

#include <algorithm>

#include "qres/error.hpp"

namespace qres {

Shape::Shape(ShapeKind kind, std::size_t m, std::size_t n, AlgebraPtr algebra)
    : kind_(kind), m_(m), n_(n), algebra_(std::move(algebra))
{
}

namespace {

AlgebraPtr cyclic_algebra(Field field, std::size_t m, std::size_t n, bool loop)
{
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    for (std::size_t p = 0; p < m; ++p) {
        objects.push_back(loop ? "q" : std::to_string(p));
        arrows.push_back({loop ? "d" : "d" + std::to_string(p), p, (p + 1) % m});
    }
    std::vector<Relation> relations;
    for (std::size_t p = 0; p < m; ++p) {
        RelationTerm term{Scalar::one(field), {}};
        for (std::size_t i = 0; i < n; ++i)
            term.arrows.push_back((p + i) % m);
        relations.push_back({term});
    }
    return QuiverAlgebra::create(field, std::move(objects), std::move(arrows), std::move(relations), n + 1);
}

}  // namespace

Shape Shape::loop(Field field)
{
    Shape s(ShapeKind::Loop, 1, 2, cyclic_algebra(field, 1, 2, true));
    s.serre_ = {0};
    require(s.dimension_duality_holds(s.serre_), ErrorKind::Internal, "loop shape fails dimension duality");
    return s;
}

Shape Shape::cyclic(Field field, std::size_t m, std::size_t n)
{
    require(m >= 1 && n >= 2, ErrorKind::InvalidParameters, "cyclic shapes need m >= 1 and N >= 2");
    Shape s(ShapeKind::Cyclic, m, n, cyclic_algebra(field, m, n, false));
    for (std::size_t p = 0; p < m; ++p)
        s.serre_.push_back((p + n - 1) % m);
    require(s.dimension_duality_holds(s.serre_), ErrorKind::Internal, "cyclic shape fails dimension duality");
    return s;
}

Shape Shape::custom(AlgebraPtr category, std::optional<std::vector<std::size_t>> serre)
{
    const std::size_t k = category->vertex_count();
    const std::size_t n = category->vanishing_length();
    Shape s(ShapeKind::Custom, k, n, std::move(category));
    if (serre) {
        require(serre->size() == k, ErrorKind::InvalidParameters, "Serre permutation has the wrong length");
        std::vector<std::size_t> sorted = *serre;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < k; ++i)
            require(sorted[i] == i, ErrorKind::InvalidParameters, "Serre map is not a permutation");
        require(s.dimension_duality_holds(*serre), ErrorKind::InvalidParameters,
                "Serre permutation violates dim Q(p,q) = dim Q(q,Sp)");
        s.serre_ = *serre;
        return s;
    }
    std::vector<bool> used(k, false);
    for (std::size_t p = 0; p < k; ++p) {
        std::vector<std::size_t> candidates;
        for (std::size_t c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t q = 0; q < k && ok; ++q)
                ok = s.hom_dim(p, q) == s.hom_dim(q, c);
            if (ok)
                candidates.push_back(c);
        }
        require(candidates.size() == 1 && !used[candidates[0]], ErrorKind::InvalidParameters,
                "dimension duality does not determine a Serre permutation; supply one");
        used[candidates[0]] = true;
        s.serre_.push_back(candidates[0]);
    }
    return s;
}

std::string Shape::describe() const
{
    switch (kind_) {
    case ShapeKind::Loop: return "loop";
    case ShapeKind::Cyclic: return "cyclic(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
    case ShapeKind::Custom: return "custom(" + std::to_string(object_count()) + " objects)";
    }
    return "";
}

std::size_t Shape::object_index(const std::string& name) const
{
    const auto& objs = objects();
    auto it = std::find(objs.begin(), objs.end(), name);
    if (it == objs.end())
        fail(ErrorKind::UnknownObject, "no shape object named '" + name + "'");
    return static_cast<std::size_t>(it - objs.begin());
}

void Shape::check_object(std::size_t p) const
{
    require(p < object_count(), ErrorKind::UnknownObject, "shape object " + std::to_string(p) + " out of range");
}

const std::vector<std::size_t>& Shape::hom_basis(std::size_t p, std::size_t q) const
{
    check_object(p);
    check_object(q);
    return algebra_->basis_between(p, q);
}

std::vector<std::size_t> Shape::pseudoradical_basis(std::size_t p, std::size_t q) const
{
    std::vector<std::size_t> out;
    for (auto b : hom_basis(p, q))
        if (algebra_->basis()[b].length() > 0)
            out.push_back(b);
    return out;
}

Matrix Shape::compose(std::size_t g, std::size_t h) const
{
    const auto& basis = algebra_->basis();
    require(g < basis.size() && h < basis.size() && basis[g].target == basis[h].source,
            ErrorKind::InvalidParameters, "morphisms are not composable");
    Path path{basis[g].source, basis[h].target, basis[g].arrows};
    path.arrows.insert(path.arrows.end(), basis[h].arrows.begin(), basis[h].arrows.end());
    return algebra_->normal_form(path).select_rows(hom_basis(path.source, path.target));
}

bool Shape::dimension_duality_holds(const std::vector<std::size_t>& permutation) const
{
    const std::size_t k = object_count();
    if (permutation.size() != k)
        return false;
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q)
            if (hom_dim(p, q) != hom_dim(q, permutation[p]))
                return false;
    return true;
}

AlgebraPtr category_algebra(const Shape& shape, const AlgebraPtr& base)
{
    const auto& q = *shape.algebra();
    const auto& a = *base;
    require(q.field() == a.field(), ErrorKind::InvalidParameters, "shape and base algebra over different fields");
    const Field f = a.field();
    const std::size_t nb = a.vertex_count();
    const std::size_t nsa = q.arrows().size();
    const std::size_t na = a.arrows().size();
    std::vector<std::string> vertices;
    for (std::size_t p = 0; p < q.vertex_count(); ++p)
        for (std::size_t v = 0; v < nb; ++v)
            vertices.push_back(q.vertices()[p] + "|" + a.vertices()[v]);
    std::vector<Arrow> arrows;
    for (std::size_t al = 0; al < nsa; ++al)
        for (std::size_t v = 0; v < nb; ++v) {
            const auto& arr = q.arrows()[al];
            arrows.push_back({arr.name + "|" + a.vertices()[v], arr.source * nb + v, arr.target * nb + v});
        }
    for (std::size_t p = 0; p < q.vertex_count(); ++p)
        for (std::size_t b = 0; b < na; ++b) {
            const auto& arr = a.arrows()[b];
            arrows.push_back({q.vertices()[p] + "|" + arr.name, p * nb + arr.source, p * nb + arr.target});
        }
    auto shape_arrow = [&](std::size_t al, std::size_t v) { return al * nb + v; };
    auto base_arrow = [&](std::size_t p, std::size_t b) { return nsa * nb + p * na + b; };

    std::vector<Relation> relations;
    for (const auto& rel : q.relations())
        for (std::size_t v = 0; v < nb; ++v) {
            Relation r;
            for (const auto& term : rel) {
                RelationTerm t{term.coeff, {}};
                for (auto al : term.arrows)
                    t.arrows.push_back(shape_arrow(al, v));
                r.push_back(std::move(t));
            }
            relations.push_back(std::move(r));
        }
    for (const auto& rel : a.relations())
        for (std::size_t p = 0; p < q.vertex_count(); ++p) {
            Relation r;
            for (const auto& term : rel) {
                RelationTerm t{term.coeff, {}};
                for (auto b : term.arrows)
                    t.arrows.push_back(base_arrow(p, b));
                r.push_back(std::move(t));
            }
            relations.push_back(std::move(r));
        }
    for (std::size_t al = 0; al < nsa; ++al)
        for (std::size_t b = 0; b < na; ++b) {
            const auto& sa = q.arrows()[al];
            const auto& ba = a.arrows()[b];
            relations.push_back({{Scalar::one(f), {shape_arrow(al, ba.source), base_arrow(sa.target, b)}},
                                 {Scalar(f, -1LL), {base_arrow(sa.source, b), shape_arrow(al, ba.target)}}});
        }
    return QuiverAlgebra::create(f, std::move(vertices), std::move(arrows), std::move(relations),
                                 q.vanishing_length() + a.vanishing_length() + 2);
}

StalkResolution stalk_resolution(const Shape& shape, std::size_t object, std::size_t length)
{
    require(object < shape.object_count(), ErrorKind::UnknownObject, "shape object out of range");
    StalkResolution out{simple(shape.algebra(), object), {}};
    Module target = out.stalk;
    ModuleMap into_target = ModuleMap::identity(target);
    for (std::size_t j = 0; j < length; ++j) {
        if (target.is_zero())
            break;
        auto cover = projective_cover(target);
        out.terms.push_back({cover.vertices, into_target * cover.map});
        auto k = kernel(cover.map);
        target = k.module;
        into_target = k.inclusion;
    }
    return out;
}

}  // namespace qres
