#include "qres/selfcheck.hpp"

#include <algorithm>

#include "qres/catalog.hpp"
#include "qres/decomp.hpp"
#include "qres/diffmod.hpp"
#include "qres/error.hpp"
#include "qres/io.hpp"
#include "qres/random.hpp"
#include "qres/resolve.hpp"

namespace qres::selfcheck {

Scale parse_scale(const std::string& text)
{
    if (text == "tiny")
        return Scale::Tiny;
    if (text == "small")
        return Scale::Small;
    if (text == "full")
        return Scale::Full;
    fail(ErrorKind::ParseError, "scale must be tiny, small or full");
}

std::size_t scaled(std::size_t full, Scale scale)
{
    switch (scale) {
    case Scale::Tiny:
        return std::max<std::size_t>(1, full / 20);
    case Scale::Small:
        return std::max<std::size_t>(1, full / 4);
    default:
        return full;
    }
}

namespace {

struct Instance {
    bool skipped = false;
    std::string failure;

    void skip() { skipped = true; }
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failure.empty())
            failure = what;
    }
};

class Runner {
public:
    Runner(std::size_t id, std::string name) { result_.id = id, result_.name = std::move(name); }

    template <class Body>
    void run(const std::string& label, Body&& body)
    {
        Instance in;
        try {
            body(in);
        } catch (const Error& e) {
            in.failure = e.what();
        }
        if (in.skipped && in.failure.empty())
            return;
        ++result_.instances;
        if (!in.failure.empty()) {
            if (result_.failures == 0)
                first_ = label + ": " + in.failure;
            ++result_.failures;
        }
    }

    SuiteResult done(const std::string& counters)
    {
        result_.note = result_.failures ? first_ : counters;
        return result_;
    }

private:
    SuiteResult result_;
    std::string first_;
};

std::string label(const Setting& s, std::size_t trial)
{
    return s.shape().describe() + " over " + s.field().to_string() + " #" + std::to_string(trial);
}

std::vector<AlgebraPtr> hereditary_bases(Field f)
{
    return {linear_quiver(f, 2), linear_quiver(f, 3), d4_subspace(f)};
}

// Settings for general-shape suites, kept small: the category algebra grows
// with the product of both sizes.
std::vector<SettingPtr> mixed_settings(Field f)
{
    return {Setting::create(Shape::loop(f), linear_quiver(f, 2)),
            Setting::create(Shape::loop(f), a3_zero_relation(f)),
            Setting::create(Shape::cyclic(f, 3, 2), linear_quiver(f, 2)),
            Setting::create(Shape::cyclic(f, 2, 2), field_algebra(f)),
            Setting::create(Shape::cyclic(f, 2, 3), field_algebra(f))};
}

bool verified_iso(const IsoResult& r, const Module& m, const Module& n)
{
    return r.verdict == IsoVerdict::Isomorphic && r.iso && r.iso->source() == m && r.iso->target() == n &&
           r.iso->is_iso();
}

SuiteResult existence(Scale scale, std::uint64_t seed)
{
    Runner run(1, "minimal resolutions of differential modules exist and certify");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    std::size_t nonzero = 0, largest = 0;
    for (auto f : {Field::prime(2), Field::prime(5)}) {
        for (const auto& a : hereditary_bases(f)) {
            for (std::size_t t = 0; t < n; ++t) {
                DifferentialModule d = random_differential_module(a, rng, 20);
                const std::uint64_t s = rng.next();
                run.run(f.to_string() + " " + std::to_string(a->vertex_count()) + "-vertex #" + std::to_string(t),
                        [&](Instance& in) {
                            auto r = resolve_min_diff(d, s);
                            in.expect(r.certificates.all(), "construction certificates failed");
                            auto again = certify_diff_resolution(d, r.target, r.map, s + 1);
                            in.expect(again.morphism, "not a chain map");
                            in.expect(again.quasi_isomorphism, "not a quasi-isomorphism");
                            in.expect(again.injective, "target not injective");
                            in.expect(again.socle_in_cycles, "socle not in cycles");
                            in.expect(again.no_exact_summand, "exact summand present");
                            nonzero += !r.target.underlying().is_zero();
                            largest = std::max(largest, d.underlying().total_dim());
                        });
            }
        }
    }
    return run.done(std::to_string(nonzero) + " nonzero targets, inputs up to dimension " + std::to_string(largest));
}

SuiteResult splitting(Scale scale, std::uint64_t seed)
{
    Runner run(2, "semiinjective diagrams split into minimal plus injective");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    std::size_t both = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto base = linear_quiver(f, 2 + (t / 2) % 2);
        auto s = t % 4 < 2 ? Setting::create(Shape::loop(f), base)
                           : Setting::create(Shape::cyclic(f, 3, 2), linear_quiver(f, 2));
        const std::uint64_t sd = rng.next();
        run.run(label(*s, t), [&](Instance& in) {
            Rng local(sd);
            Diagram i = random_semiinjective(*s, local, 24);
            in.expect(is_semiinjective(*s, i), "generator produced a non-semiinjective diagram");
            auto split = split_injective_part(*s, i, sd);
            auto sum = direct_sum(s->lambda(), {split.minimal, split.injective}).sum;
            in.expect(split.iso.source() == i && split.iso.target() == sum && split.iso.is_iso(),
                      "isomorphism witness fails");
            in.expect(is_exact(*s, split.injective) && is_injective_object(*s, split.injective),
                      "split-off part is not an exact injective object");
            in.expect(is_minimal_semiinjective(*s, split.minimal, sd), "remaining part has an exact summand");
            both += !split.minimal.is_zero() && !split.injective.is_zero();
        });
    }
    return run.done(std::to_string(both) + " instances with both parts nonzero");
}

SuiteResult uniqueness(Scale scale, std::uint64_t seed)
{
    Runner run(3, "independent minimal resolutions are isomorphic under the source");
    Rng rng(seed);
    const std::size_t n = scaled(50, scale);
    std::size_t nonzero = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto settings = mixed_settings(f);
        const auto& s = settings[(t / 2) % settings.size()];
        // Exact sources have zero resolutions, so draw until one is not exact.
        Diagram x = random_module(s->lambda(), rng, 8);
        for (int tries = 0; tries < 50 && is_exact(*s, x); ++tries)
            x = random_module(s->lambda(), rng, 8);
        const std::uint64_t a = rng.next(), b = rng.next();
        run.run(label(*s, t), [&](Instance& in) {
            Resolution r = resolve_min(*s, x, {a, 3});
            Rng local(b);
            Resolution r2 = rebase(*s, resolve_min(*s, x, {b, 3}), local);
            in.expect(r.certified.all() && r2.certified.all(), "resolution certificates failed");
            Comparison c = comparison_iso(*s, r, r2);
            in.expect(verify_comparison(*s, r, r2, c), "comparison witness fails");
            nonzero += !r.target.is_zero();
        });
    }
    return run.done(std::to_string(nonzero) + " nonzero resolutions compared");
}

SuiteResult ringel_zhang(Scale scale, std::uint64_t seed)
{
    Runner run(4, "homology and minimal resolution are inverse bijections");
    Rng rng(seed);
    const std::size_t n = scaled(50, scale);
    std::size_t nonzero = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto bases = hereditary_bases(f);
        auto a = bases[(t / 2) % bases.size()];
        Module m = random_module(a, rng, 8);
        const std::uint64_t sd = rng.next();
        run.run("H K on module #" + std::to_string(t), [&](Instance& in) {
            DifferentialModule j = rz_K(m, sd);
            Module h = rz_H(j, sd);
            in.expect(verified_iso(is_isomorphic(h, m, sd), h, m), "H K(M) not isomorphic to M");
        });
    }
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto bases = hereditary_bases(f);
        auto s = loop_setting(bases[(t / 2) % bases.size()]);
        const std::uint64_t sd = rng.next();
        run.run("K H on minimal object #" + std::to_string(t), [&](Instance& in) {
            Rng local(sd);
            // Minimal parts of random semiinjective diagrams, retried until nonzero.
            Diagram minimal = Module::zero(s->lambda());
            for (int tries = 0; tries < 200 && minimal.is_zero(); ++tries)
                minimal = split_injective_part(*s, random_semiinjective(*s, local, 16), sd).minimal;
            if (minimal.is_zero())
                return in.skip();
            DifferentialModule j = from_diagram(*s, minimal);
            in.expect(is_minimal_gorenstein_injective(j, sd), "generator output is not certified minimal");
            DifferentialModule back = rz_K(rz_H(j, sd), sd);
            Diagram bx = to_diagram(*s, back);
            auto iso = is_isomorphic(bx, minimal, sd);
            in.expect(verified_iso(iso, bx, minimal), "K H(J) not isomorphic to J");
            if (iso.iso)
                in.expect(is_chain_map(from_diagram_map(*s, *iso.iso), back, j), "witness is not a chain map");
            ++nonzero;
        });
    }
    return run.done(std::to_string(nonzero) + " minimal objects round-tripped");
}

SuiteResult derived_hom(Scale scale, std::uint64_t seed)
{
    Runner run(5, "derived Hom of stalks equals Hom plus Ext^1");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    std::size_t with_ext = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto bases = hereditary_bases(f);
        auto s = loop_setting(bases[(t / 2) % bases.size()]);
        Module m = random_module(s->base(), rng, 6);
        Module nn = random_module(s->base(), rng, 6);
        const std::uint64_t sd = rng.next();
        run.run(label(*s, t), [&](Instance& in) {
            auto x = to_diagram(*s, DifferentialModule::trivial(m));
            auto y = to_diagram(*s, DifferentialModule::trivial(nn));
            auto h = hom_in_derived(*s, x, y, sd);
            const std::size_t ext = ext_dim(m, nn, 1);
            in.expect(h.dimension == hom_dim(m, nn) + ext,
                      "dimension " + std::to_string(h.dimension) + " differs from Hom + Ext^1");
            with_ext += ext > 0;
        });
    }
    return run.done(std::to_string(with_ext) + " pairs with nonzero Ext^1");
}

SuiteResult minimality(Scale scale, std::uint64_t seed)
{
    Runner run(6, "characterizations of minimal semiinjective objects agree");
    Rng rng(seed);
    const std::size_t n = scaled(50, scale);
    std::size_t endos = 0, searched = 0, loops = 0;
    std::size_t t = 0;
    for (std::size_t attempts = 0; t < n && attempts < 20 * n; ++attempts) {
        const Field f = Field::prime(attempts % 2 ? 3 : 2);
        auto settings = mixed_settings(f);
        const auto& s = settings[(attempts / 2) % settings.size()];
        Diagram x = random_module(s->lambda(), rng, 8);
        const std::uint64_t sd = rng.next();
        Resolution r;
        try {
            r = resolve_min(*s, x, {sd, 3});
        } catch (const Error&) {
            continue;
        }
        if (r.target.is_zero() || !r.certified.all())
            continue;
        run.run(label(*s, t++), [&](Instance& in) {
            Rng local(sd);
            const Diagram& i = r.target;
            in.expect(is_minimal_semiinjective(*s, i, sd), "resolution target not minimal");

            // A weak equivalence out of I: into I (+) E, then a change of basis.
            const std::size_t q = local.below(s->object_count());
            Diagram e = functor_G(*s, s->shape().serre(q), injective(s->base(), local.below(s->base_vertex_count())));
            auto sum = direct_sum(s->lambda(), {i, e});
            auto [moved, g] = random_rebase(sum.sum, local);
            DiagramMap f1 = g * sum.injections[0];
            DiagramMap r1 = check_weq_splits(*s, f1, sd);
            in.expect(r1 * f1 == ModuleMap::identity(i), "retraction check fails");
            DiagramMap f2 = semiinjective_preenvelope(*s, i, 3);
            DiagramMap r2 = check_weq_splits(*s, f2, sd);
            in.expect(r2 * f2 == ModuleMap::identity(i), "retraction check fails on a preenvelope");

            auto basis = hom_basis(i, i);
            for (int k = 0; k < 8; ++k) {
                ModuleMap u = random_combination(basis, i, i, local);
                if (is_weak_equivalence(*s, u)) {
                    ++endos;
                    in.expect(u.is_iso(), "weak equivalence endomorphism not invertible");
                }
            }

            if (i.total_dim() <= 8) {
                ++searched;
                for (std::size_t p = 0; p < s->object_count(); ++p) {
                    in.expect(!find_mono_adjoint_line(*s, i, p), "found a line with monic adjoint");
                    in.expect(!find_counit_kernel_line(*s, i, p), "found a line missing the counit kernel");
                }
            }

            if (s->shape().is_loop()) {
                ++loops;
                in.expect(loop_socle_criterion(*s, i), "socle criterion rejects a minimal object");
                in.expect(!loop_socle_criterion(*s, sum.sum), "socle criterion accepts an injective summand");
                in.expect(!is_minimal_semiinjective(*s, sum.sum, sd), "summand criterion accepts an injective summand");
            }
        });
    }
    return run.done(std::to_string(endos) + " weak-equivalence endomorphisms, " + std::to_string(searched) +
                    " exhaustive searches, " + std::to_string(loops) + " socle comparisons");
}

// Exact diagram: sums of F_q M and G_q M, in random bases.
Diagram random_exact(const Setting& s, Rng& rng)
{
    std::vector<Module> parts;
    for (std::size_t q = 0; q < s.object_count(); ++q) {
        if (rng.coin())
            parts.push_back(functor_F(s, q, random_module(s.base(), rng, 3)));
        if (rng.coin())
            parts.push_back(functor_G(s, q, random_module(s.base(), rng, 3)));
    }
    return random_rebase(direct_sum(s.lambda(), parts).sum, rng).first;
}

SuiteResult lemmas(Scale scale, std::uint64_t seed)
{
    Runner run(7, "exactness, adjunction and envelope lemmas");
    Rng rng(seed);
    const std::size_t n = scaled(50, scale);
    std::size_t weq_sub = 0, weq_quo = 0, adjoint_monos = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        auto settings = mixed_settings(f);
        const auto& s = settings[(t / 2) % settings.size()];

        Diagram x = random_module(s->lambda(), rng, 10);
        run.run("short exact sequence " + label(*s, t), [&](Instance& in) {
            auto sub = random_submodule(x, rng);
            auto quo = cokernel(sub.inclusion);
            const bool a = is_weak_equivalence(*s, sub.inclusion), b = is_weak_equivalence(*s, quo.projection);
            in.expect(a == is_exact(*s, quo.module), "inclusion weq disagrees with exact cokernel");
            in.expect(b == is_exact(*s, sub.module), "projection weq disagrees with exact kernel");
            weq_sub += a;
            weq_quo += b;
        });

        run.run("coproduct of adjoint monos " + label(*s, t), [&](Instance& in) {
            std::vector<Module> parts;
            std::vector<ModuleMap> adjoints;
            for (std::size_t q = 0; q < s->object_count(); ++q) {
                Module ex = evaluate(*s, q, x);
                auto d = random_submodule(ex, rng);
                DiagramMap psi = adjoint_of(*s, q, d.inclusion, x);
                if (!psi.is_mono()) {
                    d = {Module::zero(s->base()), ModuleMap::zero(Module::zero(s->base()), ex)};
                    psi = adjoint_of(*s, q, d.inclusion, x);
                }
                parts.push_back(functor_F(*s, q, d.module));
                adjoints.push_back(psi);
            }
            in.expect(copair(direct_sum(s->lambda(), parts), adjoints).is_mono(), "coproduct is not monic");
        });

        run.run("essential extension " + label(*s, t), [&](Instance& in) {
            Module m = random_module(s->base(), rng, 6);
            auto env = injective_envelope(m);
            for (std::size_t q = 0; q < s->object_count(); ++q) {
                DiagramMap fe = functor_F(*s, q, env.map);
                in.expect(fe.is_mono() && is_essential(fe), "F_q of an envelope is not essential");
            }
        });

        run.run("adjoint mono " + label(*s, t), [&](Instance& in) {
            for (std::size_t q = 0; q < s->object_count(); ++q) {
                Module m = random_module(s->base(), rng, 4);
                ModuleMap mu = random_hom(m, evaluate(*s, q, x), rng);
                if (adjoint_of(*s, q, mu, x).is_mono()) {
                    ++adjoint_monos;
                    in.expect(mu.is_mono(), "monic adjoint of a non-monic map");
                }
            }
        });

        run.run("envelope of exact object " + label(*s, t), [&](Instance& in) {
            Diagram e = random_exact(*s, rng);
            in.expect(is_exact(*s, e), "generator produced a non-exact diagram");
            auto env = injective_envelope(e);
            in.expect(is_exact(*s, cokernel(env.map).module), "cokernel of the envelope is not exact");
        });
    }
    return run.done(std::to_string(weq_sub) + " monic and " + std::to_string(weq_quo) +
                    " epic weak equivalences, " + std::to_string(adjoint_monos) + " monic adjoints");
}

bool same_homology(const Homology& a, const Homology& b)
{
    return a.middle == b.middle && a.cycles.inclusion.components() == b.cycles.inclusion.components() &&
           a.boundaries == b.boundaries && a.module == b.module;
}

SuiteResult homology_paths(Scale scale, std::uint64_t seed)
{
    Runner run(8, "homology by amplitude equals homology by stalk resolutions");
    Rng rng(seed);
    std::size_t nonzero = 0;
    auto compare = [&](const SettingPtr& s, std::size_t t) {
        Diagram x = random_module(s->lambda(), rng, 12);
        run.run(label(*s, t), [&](Instance& in) {
            for (std::size_t q = 0; q < s->object_count(); ++q) {
                for (std::size_t i = 1; i <= s->homology_degrees(); ++i) {
                    auto amp = homology_data(*s, q, i, x, HomologyMethod::Amplitude);
                    auto ext = homology_data(*s, q, i, x, HomologyMethod::Ext);
                    in.expect(same_homology(amp, ext), "paths disagree at object " + std::to_string(q));
                    nonzero += !amp.module.is_zero();
                }
            }
        });
    };
    const std::size_t n = scaled(100, scale);
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        std::vector<AlgebraPtr> bases = {field_algebra(f), linear_quiver(f, 2), a3_zero_relation(f), dual_numbers(f)};
        compare(Setting::create(Shape::loop(f), bases[(t / 2) % bases.size()]), t);
    }
    const std::size_t m = scaled(50, scale);
    for (auto [period, nil] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
        for (std::size_t t = 0; t < m; ++t) {
            const Field f = Field::prime(t % 2 ? 3 : 2);
            auto base = t % 4 < 2 ? field_algebra(f) : linear_quiver(f, 2);
            compare(Setting::create(Shape::cyclic(f, period, nil), base), t);
        }
    }
    return run.done(std::to_string(nonzero) + " nonzero homology modules");
}

SuiteResult eta(Scale scale, std::uint64_t seed)
{
    Runner run(9, "eta embeddings are monic quasi-isomorphisms into exact pushouts");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    std::size_t unsplit = 0, nontrivial = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        std::vector<AlgebraPtr> bases = {linear_quiver(f, 2), linear_quiver(f, 3), d4_subspace(f), dual_numbers(f),
                                         a3_zero_relation(f)};
        auto a = bases[(t / 2) % bases.size()];
        DifferentialModule d = random_differential_module(a, rng, 12);
        run.run(f.to_string() + " #" + std::to_string(t), [&](Instance& in) {
            auto e = try_eta_embedding(d);
            if (!e) {
                ++unsplit;
                return in.skip();
            }
            in.expect(e->eta.is_mono(), "eta is not monic");
            in.expect(is_quasi_isomorphism(e->eta, e->source, d), "eta is not a quasi-isomorphism");
            in.expect(homology(e->pushout).is_zero(), "pushout has homology");
            nontrivial += !homology(d).is_zero() && !e->pushout.underlying().is_zero();
        });
    }
    return run.done(std::to_string(nontrivial) + " nontrivial embeddings, " + std::to_string(unsplit) +
                    " inputs without a splitting");
}

SuiteResult krull_schmidt(Scale scale, std::uint64_t seed)
{
    Runner run(10, "indecomposable decompositions verify");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = Field::prime(t % 2 ? 3 : 2);
        std::vector<AlgebraPtr> bases = {linear_quiver(f, 3), d4_subspace(f), a3_zero_relation(f),
                                         commutative_square(f), dual_numbers(f)};
        auto a = bases[t % bases.size()];
        Module m = random_module(a, rng, 10);
        const std::uint64_t sd = rng.next();
        run.run(std::to_string(t), [&](Instance& in) {
            auto d = indecomposables(m, sd);
            in.expect(verify_decomposition(m, d), "decomposition does not verify");
            for (const auto& part : d.summands)
                in.expect(certify_local_endomorphisms(part.module, sd), "summand has a non-local endomorphism ring");
        });
    }
    return run.done("");
}

SuiteResult interchange(Scale scale, std::uint64_t seed)
{
    Runner run(11, "documents round-trip through JSON");
    Rng rng(seed);
    const std::size_t n = scaled(100, scale);
    for (std::size_t t = 0; t < n; ++t) {
        const Field f = t % 3 == 2 ? Field::rationals() : Field::prime(t % 2 ? 3 : 2);
        std::vector<SettingPtr> settings = {Setting::create(Shape::loop(f), linear_quiver(f, 2)),
                                            Setting::create(Shape::cyclic(f, 3, 2), a3_zero_relation(f))};
        const auto& s = settings[t % 2];
        Diagram x = random_module(s->lambda(), rng, 8);
        run.run(label(*s, t), [&](Instance& in) {
            io::Json doc = io::diagram_document(*s, x);
            io::Json reparsed = io::parse(doc.dump(2), "memory");
            auto back = io::read_diagram_document(reparsed);
            in.expect(back.diagram == x, "diagram changed in a round trip");
            in.expect(io::diagram_document(*back.setting, back.diagram).dump() == doc.dump(),
                      "serialization is not stable");
        });
    }
    return run.done("");
}

}  // namespace

const std::vector<Suite>& acceptance_suites()
{
    static const std::vector<Suite> suites = {
        {1, "resolution existence", existence}, {2, "injective splitting", splitting},
        {3, "comparison uniqueness", uniqueness}, {4, "Ringel-Zhang bijection", ringel_zhang},
        {5, "derived Hom", derived_hom},          {6, "minimality criteria", minimality},
        {7, "lemma suite", lemmas},               {8, "homology paths", homology_paths},
        {9, "eta embedding", eta},
    };
    return suites;
}

const std::vector<Suite>& extra_suites()
{
    static const std::vector<Suite> suites = {
        {10, "Krull-Schmidt", krull_schmidt},
        {11, "interchange", interchange},
    };
    return suites;
}

}  // namespace qres::selfcheck
