#include "qres/resolve.hpp"

#include "qres/decomp.hpp"
#include "qres/diffmod.hpp"
#include "qres/error.hpp"
#include "qres/random.hpp"

namespace qres {

namespace {

ModuleMap pair_or_zero(const Module& source, const DirectSum& target, const std::vector<ModuleMap>& maps)
{
    return maps.empty() ? ModuleMap::zero(source, target.sum) : pair(target, maps);
}

bool prime_or_loop(const Setting& s)
{
    return s.field().is_prime() || s.shape().kind() == ShapeKind::Loop;
}

}  // namespace

InjectiveSplit split_injective_part(const Setting& s, const Diagram& i, std::uint64_t seed)
{
    s.check(i);
    require(s.field().is_prime(), ErrorKind::DecompositionUnavailable,
            "splitting off injective summands needs a decomposition, which needs a prime field");
    require(is_semiinjective(s, i), ErrorKind::NotSemiinjective, "diagram is not semiinjective");
    auto dec = indecomposables(i, seed);
    std::vector<Module> keep, drop;
    std::vector<ModuleMap> keep_proj, drop_proj;
    for (const auto& part : dec.summands) {
        if (is_exact(s, part.module)) {
            drop.push_back(part.module);
            drop_proj.push_back(part.projection);
        } else {
            keep.push_back(part.module);
            keep_proj.push_back(part.projection);
        }
    }
    auto minimal = direct_sum(s.lambda(), keep);
    auto injective = direct_sum(s.lambda(), drop);
    auto both = direct_sum(s.lambda(), {minimal.sum, injective.sum});

    InjectiveSplit out;
    out.minimal = minimal.sum;
    out.injective = injective.sum;
    out.to_minimal = pair_or_zero(i, minimal, keep_proj);
    out.iso = pair(both, {out.to_minimal, pair_or_zero(i, injective, drop_proj)});
    require(out.iso.is_iso(), ErrorKind::Internal, "split of the injective part is not an isomorphism");
    require(is_injective_object(s, out.injective), ErrorKind::Internal, "exact summands are not an injective object");
    return out;
}

bool loop_socle_criterion(const Setting& s, const Diagram& i)
{
    return socle_in_cycles(from_diagram(s, i));
}

bool is_minimal_semiinjective(const Setting& s, const Diagram& i, std::uint64_t seed)
{
    const bool minimal = split_injective_part(s, i, seed).injective.is_zero();
    if (s.shape().kind() == ShapeKind::Loop)
        require(minimal == loop_socle_criterion(s, i), ErrorKind::Internal,
                "summand and socle criteria for minimality disagree");
    return minimal;
}

namespace {

// c -> (+)_q G_q(E(E_q c)), an injective object containing c.
DiagramMap coinduction(const Setting& s, const Diagram& c)
{
    std::vector<Module> targets;
    std::vector<ModuleMap> maps;
    for (std::size_t q = 0; q < s.object_count(); ++q) {
        auto env = injective_envelope(evaluate(s, q, c));
        DiagramMap g = functor_G(s, q, env.map) * unit(s, q, c);
        targets.push_back(g.target());
        maps.push_back(std::move(g));
    }
    return pair(direct_sum(s.lambda(), targets), maps);
}

// Epi (+)_q F_q E_q p -> p; the kernel is termwise injective when p is.
DiagramMap counit_sum(const Setting& s, const Diagram& p)
{
    std::vector<Module> sources;
    std::vector<ModuleMap> maps;
    for (std::size_t q = 0; q < s.object_count(); ++q) {
        DiagramMap e = counit(s, q, p);
        sources.push_back(e.source());
        maps.push_back(std::move(e));
    }
    return copair(direct_sum(s.lambda(), sources), maps);
}

}  // namespace

DiagramMap semiinjective_preenvelope(const Setting& s, const Diagram& x, std::size_t bound)
{
    s.check(x);
    std::vector<DiagramMap> into, onto;
    Diagram c = x;
    while (!is_semiinjective(s, c)) {
        if (into.size() == bound)
            fail(ErrorKind::ResolutionNotFound,
                 "no termwise injective cosyzygy within " + std::to_string(bound) + " steps");
        DiagramMap u = coinduction(s, c);
        auto coker = cokernel(u);
        into.push_back(std::move(u));
        onto.push_back(coker.projection);
        c = coker.module;
    }

    // u : c^k -> P^k with P^k termwise injective and exact cokernel.
    DiagramMap u = ModuleMap::identity(c);
    const Field f = s.field();
    for (std::size_t k = into.size(); k-- > 0;) {
        const Diagram p = u.target();
        // Special precover of c^(k+1): the preimage of c^(k+1) under the counit.
        DiagramMap eps = counit_sum(s, p);
        Subobject pre = kernel(cokernel(u).projection * eps);
        DiagramMap pi = lift_through_mono(eps * pre.inclusion, u);
        // Pullback of J^k -> c^(k+1) <- preimage.
        auto sum = direct_sum(s.lambda(), {into[k].target(), pre.module});
        Subobject pb = kernel(copair(sum, {onto[k], pi.scaled(Scalar(f, -1LL))}));
        DiagramMap to_sum = pair(sum, {into[k], ModuleMap::zero(into[k].source(), pre.module)});
        u = lift_through_mono(to_sum, pb.inclusion);
    }
    require(is_semiinjective(s, u.target()) && u.is_mono() && is_exact(s, cokernel(u).module), ErrorKind::Internal,
            "preenvelope construction failed its own checks");
    return u;
}

ResolutionFlags certify_resolution(const Setting& s, const Resolution& r, std::uint64_t seed)
{
    ResolutionFlags flags;
    flags.weak_equivalence = r.map.source() == r.source && r.map.target() == r.target && is_weak_equivalence(s, r.map);
    flags.semiinjective = is_semiinjective(s, r.target);
    if (flags.semiinjective)
        flags.minimal = s.field().is_prime() ? is_minimal_semiinjective(s, r.target, seed) : loop_socle_criterion(s, r.target);
    return flags;
}

Resolution resolve_min(const Setting& s, const Diagram& x, const ResolveOptions& options)
{
    s.check(x);
    require(s.base()->is_acyclic(), ErrorKind::NonAcyclicBase, "resolutions need an acyclic base quiver");
    require(prime_or_loop(s), ErrorKind::DecompositionUnavailable,
            "minimality over the rationals is only decidable for the loop shape");
    Resolution out;
    out.source = x;
    if (s.shape().kind() == ShapeKind::Loop && is_hereditary(s.base())) {
        auto r = resolve_min_diff(from_diagram(s, x), options.seed);
        out.target = to_diagram(s, r.target);
        out.map = to_diagram_map(s, r.map, r.source, r.target);
    } else {
        require(s.field().is_prime(), ErrorKind::DecompositionUnavailable,
                "general resolutions split off injectives by decomposition, which needs a prime field");
        DiagramMap u = semiinjective_preenvelope(s, x, options.bound);
        auto split = split_injective_part(s, u.target(), options.seed);
        out.target = split.minimal;
        out.map = split.to_minimal * u;
    }
    out.certified = certify_resolution(s, out, options.seed + 1);
    require(out.certified.all(), ErrorKind::CertificationFailure, "resolution failed one of its certificates");
    return out;
}

Comparison comparison_iso(const Setting& s, const Resolution& r, const Resolution& r2)
{
    s.check(r.map);
    s.check(r2.map);
    require(r.source == r2.source, ErrorKind::PreconditionViolation, "resolutions have different sources");
    require(r.certified.all() && r2.certified.all(), ErrorKind::PreconditionViolation,
            "comparison needs certified minimal resolutions");
    Comparison out;
    out.envelope = injective_envelope(r.source).map;
    auto maps = hom_basis(r.target, r2.target);
    auto homotopies = hom_basis(out.envelope.target(), r2.target);
    const Scalar minus_one(s.field(), -1LL);
    std::vector<Matrix> images;
    for (const auto& b : maps)
        images.push_back((b * r.map).flatten());
    for (const auto& h : homotopies)
        images.push_back((h * out.envelope).scaled(minus_one).flatten());
    auto c = solve_combination(images, r2.map.flatten());
    if (!c)
        fail(ErrorKind::NoSolution, "no map i with i x ~ x' between the resolutions");
    out.iso = combine(maps, c->block(0, 0, maps.size(), 1), r.target, r2.target);
    out.homotopy = combine(homotopies, c->block(maps.size(), 0, homotopies.size(), 1), out.envelope.target(),
                           r2.target);
    require(out.iso.is_iso(), ErrorKind::CertificationFailure, "comparison map between minimal resolutions is not invertible");
    return out;
}

bool verify_comparison(const Setting& s, const Resolution& r, const Resolution& r2, const Comparison& c)
{
    s.check(c.iso);
    return c.iso.is_iso() && c.envelope.source() == r.source && c.envelope.is_mono() &&
           is_injective_object(s, c.envelope.target()) && c.iso * r.map - r2.map == c.homotopy * c.envelope;
}

DiagramMap check_weq_splits(const Setting& s, const DiagramMap& f, std::uint64_t seed)
{
    s.check(f);
    require(is_semiinjective(s, f.source()) && is_minimal_semiinjective(s, f.source(), seed),
            ErrorKind::PreconditionViolation, "source is not minimal semiinjective");
    require(is_weak_equivalence(s, f), ErrorKind::PreconditionViolation, "map is not a weak equivalence");
    auto basis = hom_basis(f.target(), f.source());
    std::vector<Matrix> images;
    for (const auto& g : basis)
        images.push_back((g * f).flatten());
    auto c = solve_combination(images, ModuleMap::identity(f.source()).flatten());
    if (!c)
        fail(ErrorKind::NoRetraction, "weak equivalence out of a minimal semiinjective object has no retraction");
    return combine(basis, *c, f.target(), f.source());
}

HomInDerived hom_in_derived(const Setting& s, const Diagram& x, const Diagram& y, std::uint64_t seed)
{
    s.check(x);
    require(is_hereditary(s.base()), ErrorKind::NonHereditaryBase, "Hom in the derived category needs a hereditary base");
    HomInDerived out;
    out.resolution = resolve_min(s, y, {seed, 3});
    auto h = hom_mod_injectives(s, x, out.resolution.target);
    out.dimension = h.dimension;
    out.representatives = std::move(h.representatives);
    return out;
}

namespace {

// Every line of the socle of E_q I at every base vertex, as a vector of E_q I.
template <typename Visit>
std::optional<Matrix> each_socle_line(const Setting& s, const Diagram& i, std::size_t q, Visit visit)
{
    require(s.field().is_prime(), ErrorKind::RationalsUnsupported, "exhaustive socle search needs a finite field");
    const Module m = evaluate(s, q, i);
    const auto soc = socle(m);
    const std::uint32_t p = s.field().characteristic();
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        const std::size_t n = soc.module.dim(v);
        // Normalized coordinate vectors: the last nonzero entry is 1.
        for (std::size_t lead = 0; lead < n; ++lead) {
            std::vector<std::uint32_t> c(lead, 0);
            for (;;) {
                Matrix coords(s.field(), n, 1);
                for (std::size_t k = 0; k < lead; ++k)
                    coords.set(k, 0, static_cast<long long>(c[k]));
                coords.set(lead, 0, 1);
                Matrix vec = soc.inclusion.component(v) * coords;
                std::vector<Matrix> gens;
                for (std::size_t w = 0; w < m.dims().size(); ++w)
                    gens.push_back(w == v ? vec : Matrix(s.field(), m.dim(w), 0));
                if (visit(generated_submodule(m, gens).inclusion))
                    return vec;
                std::size_t k = 0;
                while (k < lead && ++c[k] == p)
                    c[k++] = 0;
                if (k == lead)
                    break;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Matrix> find_mono_adjoint_line(const Setting& s, const Diagram& i, std::size_t q)
{
    return each_socle_line(s, i, q, [&](const ModuleMap& mu) { return adjoint_of(s, q, mu, i).is_mono(); });
}

std::optional<Matrix> find_counit_kernel_line(const Setting& s, const Diagram& i, std::size_t q)
{
    const auto z = counit_kernel(s, q, i);
    return each_socle_line(s, i, q, [&](const ModuleMap& mu) {
        auto im = image_spaces(functor_F(s, q, mu));
        for (std::size_t v = 0; v < im.size(); ++v)
            if (subspace_intersection(im[v], z.inclusion.component(v)).cols() != 0)
                return false;
        return true;
    });
}

Diagram random_semiinjective(const Setting& s, Rng& rng, std::size_t max_total)
{
    require(is_hereditary(s.base()), ErrorKind::NonHereditaryBase,
            "random semiinjective diagrams are quotients of injectives, which needs a hereditary base");
    const std::size_t nq = s.object_count();
    const std::size_t nv = s.base_vertex_count();
    auto draw = [&](std::size_t budget) {
        std::vector<Module> parts;
        std::size_t used = 0;
        for (int t = 0; t < 8; ++t) {
            Module g = functor_G(s, rng.below(nq), injective(s.base(), rng.below(nv)));
            if (used + g.total_dim() > budget)
                continue;
            used += g.total_dim();
            parts.push_back(std::move(g));
            if (rng.coin(1, 3))
                break;
        }
        return direct_sum(s.lambda(), parts).sum;
    };
    Module quotient_part = draw(max_total);
    quotient_part = quotient(quotient_part, random_submodule(quotient_part, rng, 1 + rng.below(2)).inclusion.components()).module;
    Module extra = rng.coin() ? draw(max_total - quotient_part.total_dim()) : Module::zero(s.lambda());
    Module sum = direct_sum(s.lambda(), {quotient_part, extra}).sum;
    // Random bases hide the direct sum.
    return random_rebase(sum, rng).first;
}

Resolution rebase(const Setting& s, const Resolution& r, Rng& rng)
{
    s.check(r.map);
    auto [target, iso] = random_rebase(r.target, rng);
    return {r.source, target, iso * r.map, r.certified};
}

}  // namespace qres
