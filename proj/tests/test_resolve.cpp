#include <doctest.h>

#include "algebras.hpp"
#include "qres/decomp.hpp"
#include "qres/diffmod.hpp"
#include "qres/error.hpp"
#include "qres/random.hpp"
#include "qres/resolve.hpp"

using namespace qres;
using namespace qres::testing;

namespace {

Diagram with_differential(const Setting& s, const Module& m, const ModuleMap& d)
{
    return s.assemble({m}, {d});
}

Diagram zero_differential(const Setting& s, const Module& m)
{
    return s.assemble({m}, {ModuleMap::zero(m, m)});
}

// (k^2, shift) over a field.
Diagram shift_diagram(const Setting& s)
{
    const Field f = s.field();
    Module m(s.base(), {2}, {});
    return with_differential(s, m, ModuleMap(m, m, {Matrix::from_rows(f, {{0, 0}, {1, 0}})}));
}

std::vector<SettingPtr> small_settings(Field f)
{
    return {Setting::create(Shape::loop(f), linear_quiver(f, 2)),
            Setting::create(Shape::loop(f), a3_zero_relation(f)),
            Setting::create(Shape::cyclic(f, 2, 2), linear_quiver(f, 2)),
            Setting::create(Shape::cyclic(f, 3, 2), field_algebra(f)),
            Setting::create(Shape::cyclic(f, 3, 2), linear_quiver(f, 2)),
            Setting::create(Shape::cyclic(f, 2, 3), field_algebra(f))};
}

}  // namespace

TEST_CASE("semiinjectivity")
{
    const Field f = Field::prime(2);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    CHECK(is_semiinjective(*s, functor_G(*s, 0, injective(s->base(), 0))));
    CHECK_FALSE(is_semiinjective(*s, zero_differential(*s, simple(s->base(), 1))));
    CHECK(is_semiinjective(*s, Module::zero(s->lambda())));
    auto bad = Setting::create(Shape::loop(f), dual_numbers(f));
    CHECK_THROWS_AS(is_semiinjective(*bad, Module::zero(bad->lambda())), Error);
}

TEST_CASE("splitting off the injective part")
{
    const Field f = Field::prime(3);
    auto s = Setting::create(Shape::loop(f), field_algebra(f));
    Diagram shift = shift_diagram(*s);
    Diagram line = zero_differential(*s, Module(s->base(), {1}, {}));
    Diagram both = direct_sum(s->lambda(), {shift, line}).sum;
    Rng rng(1);
    Diagram hidden = random_rebase(both, rng).first;
    auto split = split_injective_part(*s, hidden);
    CHECK(split.minimal.total_dim() == 1);
    CHECK(split.injective.total_dim() == 2);
    CHECK(split.iso.is_iso());
    CHECK(is_injective_object(*s, split.injective));

    auto inj = split_injective_part(*s, shift);
    CHECK(inj.minimal.is_zero());
    CHECK(inj.injective == shift);
    auto min = split_injective_part(*s, line);
    CHECK(min.minimal == line);
    CHECK(min.injective.is_zero());

    CHECK_THROWS_AS(split_injective_part(*Setting::create(Shape::loop(f), linear_quiver(f, 2)),
                                         zero_differential(*Setting::create(Shape::loop(f), linear_quiver(f, 2)),
                                                           simple(linear_quiver(f, 2), 1))),
                    Error);
    auto q = Setting::create(Shape::loop(Field::rationals()), field_algebra(Field::rationals()));
    CHECK_THROWS_AS(split_injective_part(*q, Module::zero(q->lambda())), Error);
}

TEST_CASE("minimality")
{
    const Field f = Field::prime(2);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    auto r = resolve_min(*s, zero_differential(*s, simple(s->base(), 1)));
    CHECK(is_minimal_semiinjective(*s, r.target));
    CHECK(loop_socle_criterion(*s, r.target));
    CHECK_FALSE(is_minimal_semiinjective(*s, functor_G(*s, 0, injective(s->base(), 1))));
    CHECK(is_minimal_semiinjective(*s, Module::zero(s->lambda())));
}

TEST_CASE("minimal resolutions: examples")
{
    const Field f = Field::prime(2);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    Diagram s2 = zero_differential(*s, simple(s->base(), 1));
    auto r = resolve_min(*s, s2);
    CHECK(r.certified.all());
    CHECK(evaluate(*s, 0, r.target).dims() == std::vector<std::size_t>{2, 1});
    CHECK(is_isomorphic(qres::homology(*s, 0, 1, r.target), simple(s->base(), 1), 1).verdict ==
          IsoVerdict::Isomorphic);

    auto exact = resolve_min(*s, functor_G(*s, 0, simple(s->base(), 0)));
    CHECK(exact.target.is_zero());
    CHECK(exact.map.is_zero());

    Resolution same{r.target, r.target, ModuleMap::identity(r.target), {}};
    CHECK(certify_resolution(*s, same).all());

    auto bad = Setting::create(Shape::loop(f), dual_numbers(f));
    CHECK_THROWS_AS(resolve_min(*bad, Module::zero(bad->lambda())), Error);
}

TEST_CASE("minimal resolutions on general shapes")
{
    Rng rng(21);
    std::size_t nonzero = 0, steps_needed = 0;
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& s : small_settings(f)) {
            for (int trial = 0; trial < 6; ++trial) {
                Diagram x = random_module(s->lambda(), rng, 6);
                auto r = resolve_min(*s, x, {rng.next(), 3});
                CHECK(r.certified.all());
                CHECK(certify_resolution(*s, r, rng.next()).all());
                nonzero += !r.target.is_zero();
                steps_needed += !is_semiinjective(*s, x);

                // Idempotence: resolving the target gives the same object.
                auto again = resolve_min(*s, r.target, {rng.next(), 3});
                CHECK(is_isomorphic(again.target, r.target, rng.next()).verdict == IsoVerdict::Isomorphic);
            }
        }
    }
    CHECK(nonzero > 15);
    CHECK(steps_needed > 20);
}

TEST_CASE("the two loop constructions agree")
{
    Rng rng(22);
    for (auto f : {Field::prime(2), Field::prime(5)}) {
        auto s = Setting::create(Shape::loop(f), linear_quiver(f, 3));
        for (int trial = 0; trial < 10; ++trial) {
            Diagram x = random_module(s->lambda(), rng, 8);
            auto direct = resolve_min(*s, x, {rng.next(), 3});
            DiagramMap u = semiinjective_preenvelope(*s, x, 3);
            auto split = split_injective_part(*s, u.target(), rng.next());
            Resolution general{x, split.minimal, split.to_minimal * u, {}};
            general.certified = certify_resolution(*s, general, rng.next());
            REQUIRE(general.certified.all());
            auto c = comparison_iso(*s, direct, general);
            CHECK(verify_comparison(*s, direct, general, c));
        }
    }
}

TEST_CASE("comparison isomorphisms")
{
    const Field f = Field::prime(3);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    Diagram s2 = zero_differential(*s, simple(s->base(), 1));
    auto r = resolve_min(*s, s2);
    auto self = comparison_iso(*s, r, r);
    CHECK(verify_comparison(*s, r, r, self));
    // The identity is one of the solutions.
    CHECK(null_witness(*s, ModuleMap::identity(r.target) * r.map - r.map, self.envelope).has_value());

    Rng rng(23);
    auto moved = rebase(*s, r, rng);
    auto c = comparison_iso(*s, r, moved);
    CHECK(verify_comparison(*s, r, moved, c));

    // r' = a * r for an automorphism a of the target: i recovers one.
    auto ends = hom_basis(r.target, r.target);
    for (int t = 0; t < 10; ++t) {
        ModuleMap a = random_combination(ends, r.target, r.target, rng);
        if (!a.is_iso())
            continue;
        Resolution twisted{r.source, r.target, a * r.map, r.certified};
        auto ct = comparison_iso(*s, r, twisted);
        CHECK(verify_comparison(*s, r, twisted, ct));
        CHECK(null_witness(*s, ct.iso * r.map - a * r.map, ct.envelope).has_value());
    }

    Resolution other = resolve_min(*s, zero_differential(*s, simple(s->base(), 0)));
    CHECK_THROWS_AS(comparison_iso(*s, r, other), Error);
}

TEST_CASE("weak equivalences out of minimal objects split")
{
    const Field f = Field::prime(2);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    auto r = resolve_min(*s, zero_differential(*s, simple(s->base(), 1)));
    const Diagram& i = r.target;
    CHECK(check_weq_splits(*s, ModuleMap::identity(i)) == ModuleMap::identity(i));

    Diagram e = functor_G(*s, 0, injective(s->base(), 0));
    auto sum = direct_sum(s->lambda(), {i, e});
    DiagramMap g = check_weq_splits(*s, sum.injections[0]);
    CHECK(g * sum.injections[0] == ModuleMap::identity(i));

    Rng rng(24);
    auto [moved, iso] = random_rebase(i, rng);
    CHECK(check_weq_splits(*s, iso) == *iso.inverse());

    CHECK_THROWS_AS(check_weq_splits(*s, ModuleMap::zero(i, i)), Error);
}

TEST_CASE("Hom in the derived category: examples")
{
    const Field f = Field::prime(2);
    auto s = Setting::create(Shape::loop(f), linear_quiver(f, 2));
    Diagram s1 = zero_differential(*s, simple(s->base(), 0));
    Diagram s2 = zero_differential(*s, simple(s->base(), 1));
    CHECK(hom_in_derived(*s, s1, s2).dimension == 1);
    Diagram m = zero_differential(*s, projective(s->base(), 0));
    CHECK(hom_in_derived(*s, m, m).dimension >= 1);
    CHECK(hom_in_derived(*s, m, Module::zero(s->lambda())).dimension == 0);
    auto bad = Setting::create(Shape::loop(f), a3_zero_relation(f));
    CHECK_THROWS_AS(hom_in_derived(*bad, Module::zero(bad->lambda()), Module::zero(bad->lambda())), Error);
}

TEST_CASE("Hom in the derived category matches Hom plus Ext")
{
    Rng rng(25);
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& a : {linear_quiver(f, 2), linear_quiver(f, 3), d4_subspace(f)}) {
            auto s = Setting::create(Shape::loop(f), a);
            for (int trial = 0; trial < 8; ++trial) {
                Module m = random_module(a, rng, 5);
                Module n = random_module(a, rng, 5);
                auto h = hom_in_derived(*s, zero_differential(*s, m), zero_differential(*s, n), rng.next());
                CHECK(h.dimension == hom_dim(m, n) + ext_dim(m, n, 1));
            }
        }
    }
}

TEST_CASE("weak equivalences preserve Hom modulo injectives")
{
    Rng rng(26);
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& s : small_settings(f)) {
            for (int trial = 0; trial < 4; ++trial) {
                Diagram x = random_module(s->lambda(), rng, 5);
                auto r = resolve_min(*s, x, {rng.next(), 3});
                Diagram target = random_module(s->lambda(), rng, 5);
                DiagramMap into = semiinjective_preenvelope(*s, target, 3);
                const Diagram& i = into.target();
                auto over_y = hom_mod_injectives(*s, r.target, i);
                auto over_x = hom_mod_injectives(*s, x, i);
                CHECK(over_y.dimension == over_x.dimension);
                // Precomposition with the weak equivalence is injective on classes.
                std::size_t len = 0;
                for (std::size_t v = 0; v < x.dims().size(); ++v)
                    len += x.dim(v) * i.dim(v);
                Matrix span(s->field(), len, 0);
                for (const auto& n : over_x.null_maps)
                    span = Matrix::hstack(span, n.flatten());
                const std::size_t base_rank = span.rank();
                for (const auto& rep : over_y.representatives)
                    span = Matrix::hstack(span, (rep * r.map).flatten());
                CHECK(span.rank() == base_rank + over_y.dimension);
            }
        }
    }
}

TEST_CASE("characterizations of minimality")
{
    Rng rng(27);
    std::size_t checked = 0;
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& s : small_settings(f)) {
            for (int trial = 0; trial < 4; ++trial) {
                auto r = resolve_min(*s, random_module(s->lambda(), rng, 5), {rng.next(), 3});
                const Diagram& i = r.target;
                if (i.is_zero())
                    continue;
                ++checked;
                // No nonzero exact subobject among random ones.
                for (int t = 0; t < 20; ++t) {
                    auto sub = random_submodule(i, rng, 1 + rng.below(2));
                    if (!sub.module.is_zero())
                        CHECK_FALSE(is_exact(*s, sub.module));
                }
                // Weak-equivalence endomorphisms are invertible.
                auto ends = hom_basis(i, i);
                for (int t = 0; t < 10; ++t) {
                    ModuleMap e = random_combination(ends, i, i, rng);
                    if (is_weak_equivalence(*s, e))
                        CHECK(e.is_iso());
                }
                if (i.total_dim() <= 8) {
                    for (std::size_t q = 0; q < s->object_count(); ++q) {
                        CHECK_FALSE(find_mono_adjoint_line(*s, i, q).has_value());
                        CHECK_FALSE(find_counit_kernel_line(*s, i, q).has_value());
                    }
                }
                // Adding an injective object breaks every criterion.
                std::size_t q = rng.below(s->object_count());
                Diagram e = functor_G(*s, s->shape().serre(q), injective(s->base(), rng.below(s->base_vertex_count())));
                Diagram bigger = direct_sum(s->lambda(), {i, e}).sum;
                CHECK_FALSE(is_minimal_semiinjective(*s, bigger, rng.next()));
                CHECK(find_mono_adjoint_line(*s, bigger, q).has_value());
                CHECK(find_counit_kernel_line(*s, bigger, q).has_value());
            }
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("random semiinjective diagrams split")
{
    Rng rng(28);
    std::size_t with_injective = 0, with_minimal = 0;
    for (auto f : {Field::prime(2), Field::prime(3)}) {
        for (const auto& s : {Setting::create(Shape::loop(f), linear_quiver(f, 2)),
                              Setting::create(Shape::cyclic(f, 3, 2), linear_quiver(f, 2))}) {
            for (int trial = 0; trial < 8; ++trial) {
                Diagram i = random_semiinjective(*s, rng, 16);
                REQUIRE(is_semiinjective(*s, i));
                auto split = split_injective_part(*s, i, rng.next());
                CHECK(split.iso.is_iso());
                CHECK(is_exact(*s, split.injective));
                CHECK(is_minimal_semiinjective(*s, split.minimal, rng.next()));
                with_injective += !split.injective.is_zero();
                with_minimal += !split.minimal.is_zero();
            }
        }
    }
    CHECK(with_injective > 5);
    CHECK(with_minimal > 5);
}
