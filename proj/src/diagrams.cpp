#include "qres/diagrams.hpp"

#include "qres/error.hpp"

namespace qres {

Setting::Setting(Shape shape, AlgebraPtr base, AlgebraPtr lambda, std::size_t degrees)
    : shape_(std::move(shape)), base_(std::move(base)), lambda_(std::move(lambda)), degrees_(degrees)
{
}

SettingPtr Setting::create(Shape shape, AlgebraPtr base, std::size_t degrees)
{
    require(degrees >= 1, ErrorKind::InvalidParameters, "at least one homology degree is needed");
    AlgebraPtr lambda = category_algebra(shape, base);
    const std::size_t d = shape.is_builtin() ? 2 : degrees;
    return SettingPtr(new Setting(std::move(shape), std::move(base), std::move(lambda), d));
}

bool Setting::owns(const Module& x) const
{
    return x.algebra_ptr() && x.algebra().same_as(*lambda_);
}

void Setting::check(const Module& x) const
{
    require(owns(x), ErrorKind::ShapeMismatch, "diagram does not belong to this shape and base algebra");
}

void Setting::check(const ModuleMap& f) const
{
    check(f.source());
    check(f.target());
}

Path Setting::lift(const Path& shape_path, std::size_t v) const
{
    Path out{vertex(shape_path.source, v), vertex(shape_path.target, v), {}};
    for (auto a : shape_path.arrows)
        out.arrows.push_back(shape_arrow(a, v));
    return out;
}

namespace {

ModuleMap path_map(const Setting& s, const Diagram& x, const Path& path)
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < s.base_vertex_count(); ++v)
        comps.push_back(x.path_action(s.lift(path, v)));
    return make_map_unchecked(evaluate(s, path.source, x), evaluate(s, path.target, x), std::move(comps));
}

}  // namespace

ModuleMap Setting::action(const Diagram& x, std::size_t beta) const
{
    check(x);
    return path_map(*this, x, shape_.algebra()->basis().at(beta));
}

ModuleMap Setting::action(const Diagram& x, const Matrix& coords, std::size_t p, std::size_t q) const
{
    check(x);
    const auto& paths = shape_.hom_basis(p, q);
    require(coords.rows() == paths.size() && coords.cols() == 1, ErrorKind::DimensionMismatch,
            "morphism coordinates have the wrong length");
    const Field f = field();
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < base_vertex_count(); ++v) {
        Matrix c(f, x.dim(vertex(q, v)), x.dim(vertex(p, v)));
        for (std::size_t k = 0; k < paths.size(); ++k)
            if (!coords.is_zero_at(k, 0))
                c.add_scaled(x.path_action(lift(shape_.algebra()->basis()[paths[k]], v)), coords.at(k, 0));
        comps.push_back(std::move(c));
    }
    return make_map_unchecked(evaluate(*this, p, x), evaluate(*this, q, x), std::move(comps));
}

Diagram Setting::assemble(const std::vector<Module>& values, const std::vector<ModuleMap>& arrows) const
{
    const auto& q = *shape_.algebra();
    require(values.size() == object_count() && arrows.size() == q.arrows().size(), ErrorKind::DimensionMismatch,
            "need one module per object and one map per shape arrow");
    const std::size_t nb = base_vertex_count();
    std::vector<std::size_t> dims(object_count() * nb);
    for (std::size_t p = 0; p < object_count(); ++p) {
        require(values[p].algebra().same_as(*base_), ErrorKind::InvalidModule, "value is not a module over the base");
        for (std::size_t v = 0; v < nb; ++v)
            dims[vertex(p, v)] = values[p].dim(v);
    }
    std::vector<Matrix> maps;
    for (std::size_t al = 0; al < q.arrows().size(); ++al) {
        const auto& arr = q.arrows()[al];
        require(arrows[al].source() == values[arr.source] && arrows[al].target() == values[arr.target],
                ErrorKind::InvalidModule, "shape arrow map has the wrong source or target");
        for (std::size_t v = 0; v < nb; ++v)
            maps.push_back(arrows[al].component(v));
    }
    for (std::size_t p = 0; p < object_count(); ++p)
        for (std::size_t b = 0; b < base_->arrows().size(); ++b)
            maps.push_back(values[p].arrow(b));
    return Module(lambda_, std::move(dims), std::move(maps));
}

DiagramMap Setting::assemble_map(const Diagram& source, const Diagram& target,
                                 const std::vector<ModuleMap>& parts) const
{
    check(source);
    check(target);
    require(parts.size() == object_count(), ErrorKind::DimensionMismatch, "need one map per object");
    std::vector<Matrix> comps(lambda_->vertex_count());
    for (std::size_t p = 0; p < object_count(); ++p)
        for (std::size_t v = 0; v < base_vertex_count(); ++v)
            comps[vertex(p, v)] = parts[p].component(v);
    return ModuleMap(source, target, std::move(comps));
}

Module evaluate(const Setting& s, std::size_t q, const Diagram& x)
{
    s.check(x);
    require(q < s.object_count(), ErrorKind::UnknownObject, "shape object out of range");
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < s.base_vertex_count(); ++v)
        dims.push_back(x.dim(s.vertex(q, v)));
    std::vector<Matrix> maps;
    for (std::size_t b = 0; b < s.base()->arrows().size(); ++b)
        maps.push_back(x.arrow(s.base_arrow(q, b)));
    return Module(s.base(), std::move(dims), std::move(maps));
}

ModuleMap evaluate(const Setting& s, std::size_t q, const DiagramMap& f)
{
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < s.base_vertex_count(); ++v)
        comps.push_back(f.component(s.vertex(q, v)));
    return make_map_unchecked(evaluate(s, q, f.source()), evaluate(s, q, f.target()), std::move(comps));
}

namespace {

void check_base_module(const Setting& s, const Module& m)
{
    require(m.algebra().same_as(*s.base()), ErrorKind::ShapeMismatch, "module is not over the base algebra");
}

// Post-composition with a shape arrow, Q(q, src) -> Q(q, tgt).
Matrix post_compose(const Setting& s, std::size_t q, std::size_t alpha)
{
    const auto& alg = *s.shape().algebra();
    const auto& arr = alg.arrows()[alpha];
    return alg.right_action(alpha).select_rows(alg.basis_between(q, arr.target)).select_columns(
        alg.basis_between(q, arr.source));
}

// Pre-composition with a shape arrow, Q(tgt, q) -> Q(src, q).
Matrix pre_compose(const Setting& s, std::size_t alpha, std::size_t q)
{
    const auto& alg = *s.shape().algebra();
    const auto& arr = alg.arrows()[alpha];
    const auto& from = alg.basis_between(arr.target, q);
    const auto& to = alg.basis_between(arr.source, q);
    Matrix out(s.field(), to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        const Path& gamma = alg.basis()[from[j]];
        Path path{arr.source, q, {alpha}};
        path.arrows.insert(path.arrows.end(), gamma.arrows.begin(), gamma.arrows.end());
        out.set_block(0, j, alg.normal_form(path).select_rows(to));
    }
    return out;
}

std::size_t hom_count(const Setting& s, std::size_t p, std::size_t q)
{
    return s.shape().hom_dim(p, q);
}

}  // namespace

Diagram functor_F(const Setting& s, std::size_t q, const Module& m)
{
    check_base_module(s, m);
    require(q < s.object_count(), ErrorKind::UnknownObject, "shape object out of range");
    const Field f = s.field();
    const auto& sa = *s.shape().algebra();
    const std::size_t nb = s.base_vertex_count();
    std::vector<std::size_t> dims(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < nb; ++v)
            dims[s.vertex(p, v)] = hom_count(s, q, p) * m.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t al = 0; al < sa.arrows().size(); ++al) {
        Matrix c = post_compose(s, q, al);
        for (std::size_t v = 0; v < nb; ++v)
            maps.push_back(Matrix::kron(c, Matrix::identity(f, m.dim(v))));
    }
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t b = 0; b < s.base()->arrows().size(); ++b)
            maps.push_back(Matrix::kron(Matrix::identity(f, hom_count(s, q, p)), m.arrow(b)));
    return Module(s.lambda(), std::move(dims), std::move(maps));
}

DiagramMap functor_F(const Setting& s, std::size_t q, const ModuleMap& g)
{
    Diagram src = functor_F(s, q, g.source());
    Diagram tgt = functor_F(s, q, g.target());
    std::vector<Matrix> comps(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < s.base_vertex_count(); ++v)
            comps[s.vertex(p, v)] = Matrix::kron(Matrix::identity(s.field(), hom_count(s, q, p)), g.component(v));
    return make_map_unchecked(std::move(src), std::move(tgt), std::move(comps));
}

Diagram functor_G(const Setting& s, std::size_t q, const Module& m)
{
    check_base_module(s, m);
    require(q < s.object_count(), ErrorKind::UnknownObject, "shape object out of range");
    const Field f = s.field();
    const auto& sa = *s.shape().algebra();
    const std::size_t nb = s.base_vertex_count();
    std::vector<std::size_t> dims(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < nb; ++v)
            dims[s.vertex(p, v)] = hom_count(s, p, q) * m.dim(v);
    std::vector<Matrix> maps;
    for (std::size_t al = 0; al < sa.arrows().size(); ++al) {
        // phi |-> phi(alpha . -) in the dual basis.
        Matrix c = pre_compose(s, al, q).transpose();
        for (std::size_t v = 0; v < nb; ++v)
            maps.push_back(Matrix::kron(c, Matrix::identity(f, m.dim(v))));
    }
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t b = 0; b < s.base()->arrows().size(); ++b)
            maps.push_back(Matrix::kron(Matrix::identity(f, hom_count(s, p, q)), m.arrow(b)));
    return Module(s.lambda(), std::move(dims), std::move(maps));
}

DiagramMap functor_G(const Setting& s, std::size_t q, const ModuleMap& g)
{
    Diagram src = functor_G(s, q, g.source());
    Diagram tgt = functor_G(s, q, g.target());
    std::vector<Matrix> comps(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < s.base_vertex_count(); ++v)
            comps[s.vertex(p, v)] = Matrix::kron(Matrix::identity(s.field(), hom_count(s, p, q)), g.component(v));
    return make_map_unchecked(std::move(src), std::move(tgt), std::move(comps));
}

DiagramMap counit(const Setting& s, std::size_t q, const Diagram& x)
{
    Diagram fe = functor_F(s, q, evaluate(s, q, x));
    const auto& sa = *s.shape().algebra();
    std::vector<Matrix> comps(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < s.base_vertex_count(); ++v) {
            std::vector<Matrix> blocks;
            for (auto beta : sa.basis_between(q, p))
                blocks.push_back(x.path_action(s.lift(sa.basis()[beta], v)));
            comps[s.vertex(p, v)] = Matrix::hstack(s.field(), x.dim(s.vertex(p, v)), blocks);
        }
    return make_map_unchecked(std::move(fe), x, std::move(comps));
}

DiagramMap unit(const Setting& s, std::size_t q, const Diagram& x)
{
    Diagram ge = functor_G(s, q, evaluate(s, q, x));
    const auto& sa = *s.shape().algebra();
    std::vector<Matrix> comps(s.lambda()->vertex_count());
    for (std::size_t p = 0; p < s.object_count(); ++p)
        for (std::size_t v = 0; v < s.base_vertex_count(); ++v) {
            std::vector<Matrix> blocks;
            for (auto gamma : sa.basis_between(p, q))
                blocks.push_back(x.path_action(s.lift(sa.basis()[gamma], v)));
            comps[s.vertex(p, v)] = Matrix::vstack(s.field(), x.dim(s.vertex(p, v)), blocks);
        }
    return make_map_unchecked(x, std::move(ge), std::move(comps));
}

DiagramMap adjoint_of(const Setting& s, std::size_t q, const ModuleMap& mu, const Diagram& x)
{
    require(mu.target() == evaluate(s, q, x), ErrorKind::ShapeMismatch, "map does not land in the evaluation");
    return counit(s, q, x) * functor_F(s, q, mu);
}

DiagramMap coadjoint_of(const Setting& s, std::size_t q, const ModuleMap& nu, const Diagram& x)
{
    require(nu.source() == evaluate(s, q, x), ErrorKind::ShapeMismatch, "map does not start at the evaluation");
    return functor_G(s, q, nu) * unit(s, q, x);
}

Subobject counit_kernel(const Setting& s, std::size_t q, const Diagram& x)
{
    return kernel(counit(s, q, x));
}

namespace {

// Objects met by the minimal resolution of the simple at q for the
// built-in shapes: q, q+1, q+N, q+N+1, ... with arrows alternating in
// length 1 and N-1.
std::size_t periodic_object(const Shape& shape, std::size_t q, std::size_t k)
{
    const std::size_t m = shape.period();
    const std::size_t n = shape.nilpotency();
    return (q + (k / 2) * n + (k % 2)) % m;
}

Path periodic_path(const Shape& shape, std::size_t q, std::size_t k)
{
    const std::size_t m = shape.period();
    const std::size_t from = periodic_object(shape, q, k);
    const std::size_t len = (k % 2 == 0) ? 1 : shape.nilpotency() - 1;
    Path path{from, (from + len) % m, {}};
    for (std::size_t i = 0; i < len; ++i)
        path.arrows.push_back((from + i) % m);
    return path;
}

HomologyComplex amplitude_complex(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x)
{
    require(s.shape().is_builtin(), ErrorKind::InvalidParameters,
            "the amplitude formula is only available for the built-in shapes");
    return {path_map(s, x, periodic_path(s.shape(), q, degree - 1)), path_map(s, x, periodic_path(s.shape(), q, degree))};
}

struct Cochains {
    std::vector<std::vector<std::size_t>> objects;
    std::vector<Module> terms;
};

Module cochain_term(const Setting& s, const std::vector<std::size_t>& objects, const Diagram& x)
{
    std::vector<Module> parts;
    for (auto o : objects)
        parts.push_back(evaluate(s, o, x));
    return direct_sum(s.base(), parts).sum;
}

// Hom(P_k, X) -> Hom(P_{k+1}, X) induced by phi : P_{k+1} -> P_k, both sums
// of representables Q(o, -).
ModuleMap induced_cochain_map(const Setting& s, const Diagram& x, const std::vector<std::size_t>& from_objects,
                              const std::vector<std::size_t>& to_objects, const ModuleMap* phi, const Module& source,
                              const Module& target)
{
    const Field f = s.field();
    const auto& sa = *s.shape().algebra();
    const std::size_t nb = s.base_vertex_count();
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < nb; ++v)
        comps.emplace_back(f, target.dim(v), source.dim(v));
    if (phi == nullptr)
        return ModuleMap(source, target, std::move(comps));
    for (std::size_t jt = 0; jt < to_objects.size(); ++jt) {
        const std::size_t o2 = to_objects[jt];
        std::size_t pos = 0;
        for (std::size_t l = 0; l < jt; ++l)
            pos += sa.basis_between(to_objects[l], o2).size();
        pos += sa.local_index(sa.trivial_path(o2));
        Matrix image = phi->component(o2).col(pos);
        std::size_t offset = 0;
        for (std::size_t js = 0; js < from_objects.size(); ++js) {
            const std::size_t o1 = from_objects[js];
            const std::size_t len = sa.basis_between(o1, o2).size();
            Matrix coords = image.block(offset, 0, len, 1);
            offset += len;
            if (coords.is_zero())
                continue;
            ModuleMap g = s.action(x, coords, o1, o2);
            for (std::size_t v = 0; v < nb; ++v) {
                std::size_t row = 0;
                for (std::size_t l = 0; l < jt; ++l)
                    row += x.dim(s.vertex(to_objects[l], v));
                std::size_t col = 0;
                for (std::size_t l = 0; l < js; ++l)
                    col += x.dim(s.vertex(from_objects[l], v));
                comps[v].set_block(row, col, comps[v].block(row, col, g.component(v).rows(), g.component(v).cols()) +
                                                 g.component(v));
            }
        }
    }
    return ModuleMap(source, target, std::move(comps));
}

HomologyComplex ext_complex(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                            std::vector<std::size_t>* middle_objects)
{
    auto res = stalk_resolution(s.shape(), q, degree + 2);
    auto objects_at = [&](std::size_t k) {
        return k < res.terms.size() ? res.terms[k].objects : std::vector<std::size_t>{};
    };
    std::vector<Module> c;
    for (std::size_t k = degree - 1; k <= degree + 1; ++k)
        c.push_back(cochain_term(s, objects_at(k), x));
    auto map_into = [&](std::size_t k) -> const ModuleMap* {
        return k < res.terms.size() ? &res.terms[k].map : nullptr;
    };
    if (middle_objects)
        *middle_objects = objects_at(degree);
    return {induced_cochain_map(s, x, objects_at(degree - 1), objects_at(degree), map_into(degree), c[0], c[1]),
            induced_cochain_map(s, x, objects_at(degree), objects_at(degree + 1), map_into(degree + 1), c[1], c[2])};
}

Homology homology_of(const HomologyComplex& cx)
{
    Homology h;
    h.middle = cx.out.source();
    require(cx.in.target() == h.middle, ErrorKind::Internal, "homology complex does not compose");
    require((cx.out * cx.in).is_zero(), ErrorKind::Internal, "homology complex is not a complex");
    h.cycles = kernel(cx.out);
    h.boundaries = image_spaces(cx.in);
    std::vector<Matrix> coords;
    for (std::size_t v = 0; v < h.middle.dims().size(); ++v)
        coords.push_back(SubspaceCoords(h.cycles.inclusion.component(v)).coords(h.boundaries[v]));
    h.projection = quotient(h.cycles.module, coords);
    h.module = h.projection.module;
    return h;
}

struct HomologyWithObjects {
    Homology data;
    std::vector<std::size_t> objects;
};

HomologyWithObjects compute_homology(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                                     HomologyMethod method)
{
    s.check(x);
    require(degree >= 1, ErrorKind::InvalidParameters, "homology degrees start at 1");
    require(q < s.object_count(), ErrorKind::UnknownObject, "shape object out of range");
    if (!s.shape().is_builtin())
        method = HomologyMethod::Ext;
    if (method == HomologyMethod::Amplitude)
        return {homology_of(amplitude_complex(s, q, degree, x)), {periodic_object(s.shape(), q, degree)}};
    std::vector<std::size_t> objects;
    Homology ext = homology_of(ext_complex(s, q, degree, x, &objects));
    if (method == HomologyMethod::Checked) {
        Homology amp = homology_of(amplitude_complex(s, q, degree, x));
        const bool same = objects == std::vector<std::size_t>{periodic_object(s.shape(), q, degree)} &&
                          amp.middle == ext.middle &&
                          amp.cycles.inclusion.components() == ext.cycles.inclusion.components() &&
                          amp.boundaries == ext.boundaries;
        require(same, ErrorKind::Internal, "amplitude and stalk-resolution homology disagree");
    }
    return {std::move(ext), std::move(objects)};
}

}  // namespace

HomologyComplex homology_complex(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x,
                                 HomologyMethod method)
{
    s.check(x);
    require(degree >= 1, ErrorKind::InvalidParameters, "homology degrees start at 1");
    if (method == HomologyMethod::Amplitude)
        return amplitude_complex(s, q, degree, x);
    return ext_complex(s, q, degree, x, nullptr);
}

Homology homology_data(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x, HomologyMethod method)
{
    return compute_homology(s, q, degree, x, method).data;
}

Module homology(const Setting& s, std::size_t q, std::size_t degree, const Diagram& x, HomologyMethod method)
{
    return homology_data(s, q, degree, x, method).module;
}

ModuleMap homology_map(const Setting& s, std::size_t q, std::size_t degree, const DiagramMap& f,
                       HomologyMethod method)
{
    s.check(f);
    auto hx = compute_homology(s, q, degree, f.source(), method);
    auto hy = compute_homology(s, q, degree, f.target(), method);
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < s.base_vertex_count(); ++v) {
        std::vector<Matrix> blocks;
        for (auto o : hx.objects)
            blocks.push_back(f.component(s.vertex(o, v)));
        Matrix middle = Matrix::block_diagonal(s.field(), blocks);
        Matrix lifted = middle * hx.data.cycles.inclusion.component(v) * hx.data.projection.sections[v];
        Matrix in_cycles = SubspaceCoords(hy.data.cycles.inclusion.component(v)).coords(lifted);
        comps.push_back(hy.data.projection.projection.component(v) * in_cycles);
    }
    return ModuleMap(hx.data.module, hy.data.module, std::move(comps));
}

bool is_exact(const Setting& s, const Diagram& x)
{
    for (std::size_t q = 0; q < s.object_count(); ++q)
        for (std::size_t i = 1; i <= s.homology_degrees(); ++i)
            if (!homology(s, q, i, x).is_zero())
                return false;
    return true;
}

bool is_weak_equivalence(const Setting& s, const DiagramMap& f)
{
    for (std::size_t q = 0; q < s.object_count(); ++q)
        for (std::size_t i = 1; i <= s.homology_degrees(); ++i)
            if (!homology_map(s, q, i, f).is_iso())
                return false;
    return true;
}

bool is_semiinjective(const Setting& s, const Diagram& x)
{
    s.check(x);
    require(s.base()->is_acyclic(), ErrorKind::NonAcyclicBase,
            "semiinjectivity is tested termwise, which needs an acyclic base quiver");
    for (std::size_t q = 0; q < s.object_count(); ++q)
        if (!is_injective(evaluate(s, q, x)))
            return false;
    return true;
}

bool is_injective_object(const Setting& s, const Diagram& x)
{
    return is_semiinjective(s, x) && is_exact(s, x);
}

std::vector<DiagramMap> hom_space(const Setting& s, const Diagram& x, const Diagram& y)
{
    s.check(x);
    s.check(y);
    return hom_basis(x, y);
}

namespace {

std::size_t flat_length(const Module& x, const Module& y)
{
    std::size_t n = 0;
    for (std::size_t v = 0; v < x.dims().size(); ++v)
        n += x.dim(v) * y.dim(v);
    return n;
}

}  // namespace

HomModInjectives hom_mod_injectives(const Setting& s, const Diagram& x, const Diagram& y)
{
    s.check(x);
    s.check(y);
    HomModInjectives out;
    out.envelope = injective_envelope(x).map;
    const std::size_t len = flat_length(x, y);
    Matrix span(s.field(), len, 0);
    for (const auto& h : hom_basis(out.envelope.target(), y)) {
        DiagramMap g = h * out.envelope;
        Matrix flat = g.flatten();
        if (column_space_contains(span, flat))
            continue;
        span = Matrix::hstack(span, flat);
        out.null_maps.push_back(std::move(g));
    }
    for (auto& b : hom_basis(x, y)) {
        Matrix flat = b.flatten();
        if (column_space_contains(span, flat))
            continue;
        span = Matrix::hstack(span, flat);
        out.representatives.push_back(std::move(b));
    }
    out.dimension = out.representatives.size();
    return out;
}

std::optional<DiagramMap> null_witness(const Setting& s, const DiagramMap& f, const DiagramMap& envelope)
{
    s.check(f);
    require(envelope.source() == f.source(), ErrorKind::ShapeMismatch, "envelope does not start at the source");
    auto basis = hom_basis(envelope.target(), f.target());
    std::vector<Matrix> images;
    for (const auto& h : basis)
        images.push_back((h * envelope).flatten());
    auto c = solve_combination(images, f.flatten());
    if (!c)
        return std::nullopt;
    return combine(basis, *c, envelope.target(), f.target());
}

std::size_t null_dimension_by_injectives(const Setting& s, const Diagram& x, const Diagram& y)
{
    s.check(x);
    s.check(y);
    Matrix span(s.field(), flat_length(x, y), 0);
    for (std::size_t w = 0; w < s.lambda()->vertex_count(); ++w) {
        Module i = injective(s.lambda(), w);
        auto into = hom_basis(x, i);
        auto out_of = hom_basis(i, y);
        for (const auto& b : out_of)
            for (const auto& a : into) {
                Matrix flat = (b * a).flatten();
                if (!column_space_contains(span, flat))
                    span = Matrix::hstack(span, flat);
            }
    }
    return span.cols();
}

}  // namespace qres
