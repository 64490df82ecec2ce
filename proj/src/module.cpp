#include "qres/module.hpp"

#include <numeric>

#include "qres/error.hpp"
#include "qres/rng.hpp"

namespace qres {

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrows_(std::move(arrow_maps))
{
    const auto& alg = *algebra_;
    require(dims_.size() == alg.vertex_count(), ErrorKind::InvalidModule, "one dimension per vertex expected");
    require(arrows_.size() == alg.arrows().size(), ErrorKind::InvalidModule, "one matrix per arrow expected");
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto& arr = alg.arrows()[a];
        require(arrows_[a].field() == alg.field(), ErrorKind::InvalidModule, "arrow matrix over another field");
        require(arrows_[a].rows() == dims_[arr.target] && arrows_[a].cols() == dims_[arr.source],
                ErrorKind::DimensionMismatch, "matrix for arrow '" + arr.name + "' has the wrong shape");
    }
    for (const auto& rel : alg.relations()) {
        std::size_t s = alg.arrows()[rel[0].arrows.front()].source;
        std::size_t t = alg.arrows()[rel[0].arrows.back()].target;
        Matrix sum(alg.field(), dims_[t], dims_[s]);
        for (const auto& term : rel)
            sum.add_scaled(path_action({s, t, term.arrows}), term.coeff);
        require(sum.is_zero(), ErrorKind::InvalidModule, "relations are not satisfied");
    }
}

Module Module::zero(AlgebraPtr algebra)
{
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < algebra->arrows().size(); ++a)
        maps.emplace_back(algebra->field(), 0, 0);
    std::vector<std::size_t> dims(algebra->vertex_count(), 0);
    return Module(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Module::total_dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Module::path_action(const Path& path) const
{
    Matrix m = Matrix::identity(field(), dims_[path.source]);
    for (auto a : path.arrows)
        m = arrows_[a] * m;
    return m;
}

Matrix Module::element_action(const Matrix& coords, std::size_t u, std::size_t w) const
{
    const auto& paths = algebra_->basis_between(u, w);
    require(coords.rows() == paths.size(), ErrorKind::DimensionMismatch, "element has the wrong length");
    Matrix out(field(), dims_[w], dims_[u]);
    for (std::size_t k = 0; k < paths.size(); ++k)
        if (!coords.is_zero_at(k, 0))
            out.add_scaled(path_action(algebra_->basis()[paths[k]]), coords.at(k, 0));
    return out;
}

bool operator==(const Module& a, const Module& b)
{
    return same_algebra(a, b) && a.dims_ == b.dims_ && a.arrows_ == b.arrows_;
}

bool same_algebra(const Module& a, const Module& b)
{
    return a.algebra_ptr() == b.algebra_ptr() || a.algebra().same_as(b.algebra());
}

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> components)
    : ModuleMap(Unchecked{}, std::move(source), std::move(target), std::move(components))
{
    const auto& alg = source_.algebra();
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        require(target_.arrow(a) * components_[arr.source] == components_[arr.target] * source_.arrow(a),
                ErrorKind::InvalidModule, "map does not commute with arrow '" + arr.name + "'");
    }
}

ModuleMap::ModuleMap(Unchecked, Module source, Module target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    require(same_algebra(source_, target_), ErrorKind::InvalidModule, "map between modules over different algebras");
    const std::size_t nv = source_.algebra().vertex_count();
    require(components_.size() == nv, ErrorKind::InvalidModule, "one component per vertex expected");
    for (std::size_t v = 0; v < nv; ++v)
        require(components_[v].rows() == target_.dim(v) && components_[v].cols() == source_.dim(v),
                ErrorKind::DimensionMismatch, "map component has the wrong shape");
}

ModuleMap make_map_unchecked(Module source, Module target, std::vector<Matrix> components)
{
    return ModuleMap(ModuleMap::Unchecked{}, std::move(source), std::move(target), std::move(components));
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target)
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source.dims().size(); ++v)
        comps.emplace_back(source.field(), target.dim(v), source.dim(v));
    return make_map_unchecked(source, target, std::move(comps));
}

ModuleMap ModuleMap::identity(const Module& m)
{
    std::vector<Matrix> comps;
    for (auto d : m.dims())
        comps.push_back(Matrix::identity(m.field(), d));
    return make_map_unchecked(m, m, std::move(comps));
}

ModuleMap ModuleMap::from_flat(const Module& source, const Module& target, const Matrix& column)
{
    std::vector<Matrix> comps;
    std::size_t offset = 0;
    for (std::size_t v = 0; v < source.dims().size(); ++v) {
        comps.push_back(Matrix::unflatten(column, target.dim(v), source.dim(v), offset));
        offset += target.dim(v) * source.dim(v);
    }
    require(offset == column.rows(), ErrorKind::DimensionMismatch, "flattened map has the wrong length");
    return make_map_unchecked(source, target, std::move(comps));
}

ModuleMap ModuleMap::operator+(const ModuleMap& other) const
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v)
        comps.push_back(components_[v] + other.components_[v]);
    return make_map_unchecked(source_, target_, std::move(comps));
}

ModuleMap ModuleMap::operator-(const ModuleMap& other) const
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v)
        comps.push_back(components_[v] - other.components_[v]);
    return make_map_unchecked(source_, target_, std::move(comps));
}

ModuleMap ModuleMap::scaled(const Scalar& s) const
{
    std::vector<Matrix> comps;
    for (const auto& c : components_)
        comps.push_back(c.scaled(s));
    return make_map_unchecked(source_, target_, std::move(comps));
}

ModuleMap ModuleMap::operator*(const ModuleMap& f) const
{
    require(f.target_.dims() == source_.dims() && same_algebra(f.target_, source_), ErrorKind::DimensionMismatch,
            "maps are not composable");
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v)
        comps.push_back(components_[v] * f.components_[v]);
    return make_map_unchecked(f.source_, target_, std::move(comps));
}

Matrix ModuleMap::flatten() const
{
    std::size_t n = 0;
    for (const auto& c : components_)
        n += c.rows() * c.cols();
    std::vector<Matrix> parts;
    for (const auto& c : components_)
        parts.push_back(c.flatten());
    return Matrix::vstack(field(), 1, parts);
}

std::size_t ModuleMap::rank() const
{
    std::size_t r = 0;
    for (const auto& c : components_)
        r += c.rank();
    return r;
}

bool ModuleMap::is_zero() const
{
    for (const auto& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

bool ModuleMap::is_mono() const
{
    return rank() == source_.total_dim();
}

bool ModuleMap::is_epi() const
{
    return rank() == target_.total_dim();
}

bool ModuleMap::is_iso() const
{
    return source_.dims() == target_.dims() && is_mono();
}

std::optional<ModuleMap> ModuleMap::inverse() const
{
    if (source_.dims() != target_.dims())
        return std::nullopt;
    std::vector<Matrix> comps;
    for (const auto& c : components_) {
        auto inv = c.inverse();
        if (!inv)
            return std::nullopt;
        comps.push_back(std::move(*inv));
    }
    return make_map_unchecked(target_, source_, std::move(comps));
}

bool operator==(const ModuleMap& a, const ModuleMap& b)
{
    return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
}

DirectSum direct_sum(const AlgebraPtr& algebra, const std::vector<Module>& parts)
{
    const auto& alg = *algebra;
    const std::size_t nv = alg.vertex_count();
    const Field f = alg.field();
    std::vector<std::size_t> dims(nv, 0);
    for (const auto& p : parts) {
        require(p.algebra().same_as(alg), ErrorKind::InvalidModule, "direct sum of modules over different algebras");
        for (std::size_t v = 0; v < nv; ++v)
            dims[v] += p.dim(v);
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.arrow(a));
        maps.push_back(Matrix::block_diagonal(f, blocks));
    }
    DirectSum out{Module(algebra, dims, std::move(maps)), {}, {}};
    std::vector<std::size_t> offset(nv, 0);
    for (const auto& p : parts) {
        std::vector<Matrix> inj, proj;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix i(f, dims[v], p.dim(v));
            i.set_block(offset[v], 0, Matrix::identity(f, p.dim(v)));
            proj.push_back(i.transpose());
            inj.push_back(std::move(i));
            offset[v] += p.dim(v);
        }
        out.injections.push_back(make_map_unchecked(p, out.sum, std::move(inj)));
        out.projections.push_back(make_map_unchecked(out.sum, p, std::move(proj)));
    }
    return out;
}

ModuleMap direct_sum_map(const DirectSum& source, const DirectSum& target, const std::vector<ModuleMap>& parts)
{
    require(parts.size() == source.injections.size() && parts.size() == target.injections.size(),
            ErrorKind::DimensionMismatch, "direct sum map needs one component per summand");
    ModuleMap out = ModuleMap::zero(source.sum, target.sum);
    for (std::size_t i = 0; i < parts.size(); ++i)
        out = out + target.injections[i] * parts[i] * source.projections[i];
    return out;
}

ModuleMap copair(const DirectSum& source, const std::vector<ModuleMap>& maps)
{
    require(!maps.empty() && maps.size() == source.projections.size(), ErrorKind::DimensionMismatch,
            "copairing needs one map per summand");
    ModuleMap out = maps[0] * source.projections[0];
    for (std::size_t i = 1; i < maps.size(); ++i)
        out = out + maps[i] * source.projections[i];
    return out;
}

ModuleMap pair(const DirectSum& target, const std::vector<ModuleMap>& maps)
{
    require(!maps.empty() && maps.size() == target.injections.size(), ErrorKind::DimensionMismatch,
            "pairing needs one map per summand");
    ModuleMap out = target.injections[0] * maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i)
        out = out + target.injections[i] * maps[i];
    return out;
}

namespace {

std::vector<Matrix> canonical(const Module& m, const std::vector<Matrix>& spans)
{
    require(spans.size() == m.dims().size(), ErrorKind::DimensionMismatch, "one subspace per vertex expected");
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < spans.size(); ++v) {
        require(spans[v].rows() == m.dim(v), ErrorKind::DimensionMismatch, "subspace in the wrong ambient space");
        out.push_back(spans[v].image_basis());
    }
    return out;
}

}  // namespace

Subobject submodule(const Module& m, const std::vector<Matrix>& spans)
{
    auto bases = canonical(m, spans);
    const auto& alg = m.algebra();
    std::vector<SubspaceCoords> coords;
    std::vector<std::size_t> dims;
    for (const auto& b : bases) {
        coords.emplace_back(b);
        dims.push_back(b.cols());
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        Matrix img = m.arrow(a) * bases[arr.source];
        Matrix c = coords[arr.target].coords(img);
        require(bases[arr.target] * c == img, ErrorKind::InvalidModule, "subspaces are not closed under the arrows");
        maps.push_back(std::move(c));
    }
    Module sub(m.algebra_ptr(), dims, std::move(maps));
    return {sub, make_map_unchecked(sub, m, std::move(bases))};
}

Subobject generated_submodule(const Module& m, const std::vector<Matrix>& generators)
{
    auto spans = canonical(m, generators);
    const auto& alg = m.algebra();
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
            const auto& arr = alg.arrows()[a];
            Matrix img = m.arrow(a) * spans[arr.source];
            if (column_space_contains(spans[arr.target], img))
                continue;
            spans[arr.target] = subspace_sum(spans[arr.target], img);
            grew = true;
        }
    }
    return submodule(m, spans);
}

Quotient quotient(const Module& m, const std::vector<Matrix>& spans)
{
    auto bases = canonical(m, spans);
    const auto& alg = m.algebra();
    const Field f = m.field();
    std::vector<Matrix> qs, ss;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < bases.size(); ++v) {
        auto [q, s] = quotient_map(f, m.dim(v), bases[v]);
        dims.push_back(q.rows());
        qs.push_back(std::move(q));
        ss.push_back(std::move(s));
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        require((qs[arr.target] * m.arrow(a) * bases[arr.source]).is_zero(), ErrorKind::InvalidModule,
                "subspaces are not closed under the arrows");
        maps.push_back(qs[arr.target] * m.arrow(a) * ss[arr.source]);
    }
    Module quo(m.algebra_ptr(), dims, std::move(maps));
    return {quo, make_map_unchecked(m, quo, std::move(qs)), std::move(ss)};
}

Subobject kernel(const ModuleMap& f)
{
    std::vector<Matrix> spans;
    for (const auto& c : f.components())
        spans.push_back(c.kernel_basis());
    return submodule(f.source(), spans);
}

std::vector<Matrix> image_spaces(const ModuleMap& f)
{
    std::vector<Matrix> spans;
    for (const auto& c : f.components())
        spans.push_back(c.image_basis());
    return spans;
}

Subobject image(const ModuleMap& f)
{
    return submodule(f.target(), image_spaces(f));
}

Quotient cokernel(const ModuleMap& f)
{
    return quotient(f.target(), image_spaces(f));
}

bool contains(const std::vector<Matrix>& outer, const std::vector<Matrix>& inner)
{
    for (std::size_t v = 0; v < outer.size(); ++v)
        if (!column_space_contains(outer[v], inner[v]))
            return false;
    return true;
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n)
{
    require(same_algebra(m, n), ErrorKind::InvalidModule, "Hom between modules over different algebras");
    const auto& alg = m.algebra();
    const Field f = m.field();
    const std::size_t nv = alg.vertex_count();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    const std::size_t unknowns = offset[nv];
    if (unknowns == 0)
        return {};
    std::size_t rows = 0;
    for (const auto& arr : alg.arrows())
        rows += n.dim(arr.target) * m.dim(arr.source);
    // vec(N_a f_s) = (N_a (x) 1) vec(f_s) and vec(f_t M_a) = (1 (x) M_a^T) vec(f_t)
    // for row-major vec.
    Matrix system(f, rows, unknowns);
    std::size_t r = 0;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        const std::size_t h = n.dim(arr.target) * m.dim(arr.source);
        if (h == 0)
            continue;
        Matrix left = Matrix::kron(n.arrow(a), Matrix::identity(f, m.dim(arr.source)));
        Matrix right = -Matrix::kron(Matrix::identity(f, n.dim(arr.target)), m.arrow(a).transpose());
        if (arr.source == arr.target) {
            system.set_block(r, offset[arr.source], left + right);
        } else {
            system.set_block(r, offset[arr.source], left);
            system.set_block(r, offset[arr.target], right);
        }
        r += h;
    }
    Matrix k = system.kernel_basis();
    std::vector<ModuleMap> out;
    for (std::size_t j = 0; j < k.cols(); ++j)
        out.push_back(ModuleMap::from_flat(m, n, k.col(j)));
    return out;
}

std::size_t hom_dim(const Module& m, const Module& n)
{
    return hom_basis(m, n).size();
}

ModuleMap combine(const std::vector<ModuleMap>& basis, const Matrix& coeffs, const Module& source,
                  const Module& target)
{
    require(coeffs.rows() == basis.size(), ErrorKind::DimensionMismatch, "coefficient count mismatch");
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source.dims().size(); ++v)
        comps.emplace_back(source.field(), target.dim(v), source.dim(v));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs.is_zero_at(i, 0))
            continue;
        Scalar c = coeffs.at(i, 0);
        for (std::size_t v = 0; v < comps.size(); ++v)
            comps[v].add_scaled(basis[i].component(v), c);
    }
    return make_map_unchecked(source, target, std::move(comps));
}

ModuleMap random_combination(const std::vector<ModuleMap>& basis, const Module& source, const Module& target,
                             Rng& rng)
{
    return combine(basis, Matrix::random(source.field(), basis.size(), 1, rng), source, target);
}

std::optional<Matrix> solve_combination(const std::vector<Matrix>& images, const Matrix& rhs)
{
    if (images.empty()) {
        if (rhs.is_zero())
            return Matrix(rhs.field(), 0, 1);
        return std::nullopt;
    }
    return Matrix::hstack(rhs.field(), rhs.rows(), images).solve(rhs);
}

ModuleMap lift_through_mono(const ModuleMap& f, const ModuleMap& mono)
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < f.source().dims().size(); ++v) {
        auto u = mono.component(v).solve(f.component(v));
        require(u.has_value(), ErrorKind::InvalidModule, "map does not land in the image of the monomorphism");
        comps.push_back(std::move(*u));
    }
    return ModuleMap(f.source(), mono.source(), std::move(comps));
}

std::optional<ModuleMap> extend_along(const ModuleMap& mono, const ModuleMap& h, const Module& target)
{
    auto basis = hom_basis(mono.target(), target);
    std::vector<Matrix> images;
    for (const auto& b : basis)
        images.push_back((b * mono).flatten());
    auto c = solve_combination(images, h.flatten());
    if (!c)
        return std::nullopt;
    return combine(basis, *c, mono.target(), target);
}

Subobject radical(const Module& m)
{
    const auto& alg = m.algebra();
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        std::vector<Matrix> parts;
        for (auto a : alg.arrows_in(v))
            parts.push_back(m.arrow(a));
        spans.push_back(Matrix::hstack(m.field(), m.dim(v), parts));
    }
    return submodule(m, spans);
}

Subobject socle(const Module& m)
{
    const auto& alg = m.algebra();
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
        std::vector<Matrix> parts;
        for (auto a : alg.arrows_out(v))
            parts.push_back(m.arrow(a));
        spans.push_back(Matrix::vstack(m.field(), m.dim(v), parts).kernel_basis());
    }
    return submodule(m, spans);
}

Quotient top(const Module& m)
{
    return cokernel(radical(m).inclusion);
}

Module dual(const Module& m, const AlgebraPtr& over)
{
    require(over->same_as(*m.algebra().opposite()), ErrorKind::InvalidModule,
            "dual must live over the opposite algebra");
    std::vector<Matrix> maps;
    for (const auto& a : m.arrow_maps())
        maps.push_back(a.transpose());
    return Module(over, m.dims(), std::move(maps));
}

Module dual(const Module& m)
{
    return dual(m, m.algebra().opposite());
}

ModuleMap dual(const ModuleMap& f, const Module& dual_target, const Module& dual_source)
{
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(c.transpose());
    return make_map_unchecked(dual_target, dual_source, std::move(comps));
}

Module projective(const AlgebraPtr& algebra, std::size_t v)
{
    const auto& alg = *algebra;
    require(v < alg.vertex_count(), ErrorKind::UnknownVertex, "vertex index out of range");
    std::vector<std::size_t> dims;
    for (std::size_t w = 0; w < alg.vertex_count(); ++w)
        dims.push_back(alg.basis_between(v, w).size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
        const auto& arr = alg.arrows()[a];
        const auto& from = alg.basis_between(v, arr.source);
        const auto& to = alg.basis_between(v, arr.target);
        maps.push_back(alg.right_action(a).select_rows(to).select_columns(from));
    }
    return Module(algebra, std::move(dims), std::move(maps));
}

Module injective(const AlgebraPtr& algebra, std::size_t v)
{
    return dual(projective(algebra->opposite(), v), algebra);
}

Module simple(const AlgebraPtr& algebra, std::size_t v)
{
    require(v < algebra->vertex_count(), ErrorKind::UnknownVertex, "vertex index out of range");
    std::vector<std::size_t> dims(algebra->vertex_count(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (const auto& arr : algebra->arrows())
        maps.emplace_back(algebra->field(), dims[arr.target], dims[arr.source]);
    return Module(algebra, std::move(dims), std::move(maps));
}

ModuleMap map_from_projective(const Module& pv, std::size_t v, const Module& m, const Matrix& element)
{
    const auto& alg = m.algebra();
    require(element.rows() == m.dim(v) && element.cols() == 1, ErrorKind::DimensionMismatch,
            "element has the wrong length");
    std::vector<Matrix> comps;
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
        const auto& paths = alg.basis_between(v, w);
        Matrix c(m.field(), m.dim(w), paths.size());
        for (std::size_t k = 0; k < paths.size(); ++k)
            c.set_block(0, k, m.path_action(alg.basis()[paths[k]]) * element);
        comps.push_back(std::move(c));
    }
    return make_map_unchecked(pv, m, std::move(comps));
}

namespace {

// Per vertex, vectors completing a basis of the given subspace: standard
// vectors taken greedily.
Matrix complement_vectors(Field f, std::size_t n, const Matrix& sub)
{
    return quotient_map(f, n, sub.image_basis()).s;
}

}  // namespace

Cover projective_cover(const Module& m)
{
    const auto& algebra = m.algebra_ptr();
    auto rad = radical(m);
    std::vector<Module> parts;
    std::vector<std::size_t> vertices;
    std::vector<Matrix> elements;
    for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
        Matrix gens = complement_vectors(m.field(), m.dim(v), rad.inclusion.component(v));
        for (std::size_t j = 0; j < gens.cols(); ++j) {
            parts.push_back(projective(algebra, v));
            vertices.push_back(v);
            elements.push_back(gens.col(j));
        }
    }
    auto sum = direct_sum(algebra, parts);
    if (parts.empty())
        return {ModuleMap::zero(sum.sum, m), {}};
    std::vector<ModuleMap> maps;
    for (std::size_t i = 0; i < parts.size(); ++i)
        maps.push_back(map_from_projective(parts[i], vertices[i], m, elements[i]));
    return {copair(sum, maps), vertices};
}

Cover injective_envelope(const Module& m)
{
    const auto& algebra = m.algebra_ptr();
    Module dm = dual(m);
    auto cover = projective_cover(dm);
    Module e = dual(cover.map.source(), algebra);
    return {dual(cover.map, m, e), cover.vertices};
}

Subobject syzygy(const Module& m)
{
    return kernel(projective_cover(m).map);
}

bool is_essential(const ModuleMap& mono)
{
    require(mono.is_mono(), ErrorKind::NotAMonomorphism, "essentiality is only defined for monomorphisms");
    auto soc = socle(mono.target());
    return contains(image_spaces(mono), soc.inclusion.components());
}

bool is_injective(const Module& m)
{
    auto soc = socle(m).module;
    std::vector<std::size_t> dims(m.dims().size(), 0);
    for (std::size_t v = 0; v < dims.size(); ++v) {
        if (soc.dim(v) == 0)
            continue;
        Module iv = injective(m.algebra_ptr(), v);
        for (std::size_t w = 0; w < dims.size(); ++w)
            dims[w] += soc.dim(v) * iv.dim(w);
    }
    return dims == m.dims();
}

bool is_projective(const Module& m)
{
    auto t = top(m).module;
    std::vector<std::size_t> dims(m.dims().size(), 0);
    for (std::size_t v = 0; v < dims.size(); ++v) {
        if (t.dim(v) == 0)
            continue;
        Module pv = projective(m.algebra_ptr(), v);
        for (std::size_t w = 0; w < dims.size(); ++w)
            dims[w] += t.dim(v) * pv.dim(w);
    }
    return dims == m.dims();
}

bool is_hereditary(const AlgebraPtr& algebra)
{
    if (!algebra->is_acyclic())
        return false;
    for (std::size_t v = 0; v < algebra->vertex_count(); ++v)
        if (!is_projective(radical(projective(algebra, v)).module))
            return false;
    return true;
}

InjectiveResolution min_injective_resolution(const Module& m)
{
    require(m.algebra().is_acyclic(), ErrorKind::NonAcyclicQuiver,
            "minimal injective resolutions need an acyclic quiver");
    InjectiveResolution out;
    if (m.is_zero()) {
        out.coaugmentation = ModuleMap::identity(m);
        return out;
    }
    auto env = injective_envelope(m);
    out.coaugmentation = env.map;
    out.terms.push_back(env.map.target());
    ModuleMap previous = env.map;
    for (;;) {
        auto coker = cokernel(previous);
        if (coker.module.is_zero())
            break;
        auto next = injective_envelope(coker.module);
        out.differentials.push_back(next.map * coker.projection);
        out.terms.push_back(next.map.target());
        previous = next.map;
    }
    return out;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t degree)
{
    require(same_algebra(m, n), ErrorKind::InvalidModule, "Ext between modules over different algebras");
    if (degree == 0)
        return hom_dim(m, n);
    Module k = m;
    for (std::size_t i = 1; i < degree; ++i)
        k = syzygy(k).module;
    auto cover = projective_cover(k);
    Module omega = kernel(cover.map).module;
    // 0 -> Hom(K,N) -> Hom(P,N) -> Hom(OmegaK,N) -> Ext^1(K,N) -> 0
    return hom_dim(omega, n) - hom_dim(cover.map.source(), n) + hom_dim(k, n);
}

}  // namespace qres
