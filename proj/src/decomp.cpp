#include "qres/decomp.hpp"

#include <functional>

#include "qres/error.hpp"
#include "qres/poly.hpp"
#include "qres/rng.hpp"

namespace qres {

std::vector<ModuleMap> end_ring_basis(const Module& m)
{
    return hom_basis(m, m);
}

namespace {

Matrix total_matrix(const ModuleMap& f)
{
    return Matrix::block_diagonal(f.field(), f.components());
}

ModuleMap apply_poly(const Poly& g, const ModuleMap& f)
{
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(evaluate(g, c));
    return make_map_unchecked(f.source(), f.target(), std::move(comps));
}

ModuleMap map_power(const ModuleMap& f, std::size_t n)
{
    std::vector<Matrix> comps;
    for (const auto& c : f.components())
        comps.push_back(c.power(n));
    return make_map_unchecked(f.source(), f.target(), std::move(comps));
}

// Growing span of flattened maps together with the maps themselves.
struct MapSpan {
    Matrix flat;
    std::vector<ModuleMap> maps;

    MapSpan(Field f, std::size_t len) : flat(f, len, 0) {}

    bool add(const ModuleMap& g)
    {
        Matrix v = g.flatten();
        if (column_space_contains(flat, v))
            return false;
        flat = Matrix::hstack(flat, v);
        maps.push_back(g);
        return true;
    }
    std::size_t dim() const { return maps.size(); }
};

std::size_t flat_length(const Module& m)
{
    std::size_t n = 0;
    for (auto d : m.dims())
        n += d * d;
    return n;
}

bool local_certificate(const Module& x, const std::vector<ModuleMap>& basis, Rng& rng, std::size_t tries)
{
    const std::size_t e = basis.size();
    if (e == 0)
        return false;
    if (e == 1)
        return true;
    const Field f = x.field();
    const std::size_t len = flat_length(x);

    MapSpan ideal(f, len);
    for (const auto& b : basis) {
        auto factors = irreducible_factors(minimal_polynomial(total_matrix(b)), rng);
        if (factors.size() != 1)
            return false;
        ideal.add(apply_poly(factors[0], b));
    }
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = i + 1; j < e; ++j)
            ideal.add(basis[i] * basis[j] - basis[j] * basis[i]);
    for (std::size_t k = 0; k < ideal.dim(); ++k) {
        if (ideal.dim() >= e)
            return false;
        for (const auto& b : basis) {
            ideal.add(b * ideal.maps[k]);
            ideal.add(ideal.maps[k] * b);
        }
    }
    if (ideal.dim() >= e)
        return false;

    // J^k shrinks to zero when J is nilpotent.
    std::vector<ModuleMap> power = ideal.maps;
    while (!power.empty()) {
        MapSpan next(f, len);
        for (const auto& p : power)
            for (const auto& j : ideal.maps)
                next.add(p * j);
        if (next.dim() >= power.size() && next.dim() > 0)
            return false;
        power = next.maps;
    }

    const std::size_t d = e - ideal.dim();
    if (d == 1)
        return true;
    // End/J is a field iff some theta has 1, theta, ..., theta^(d-1)
    // independent modulo J with an irreducible relation in degree d.
    for (std::size_t t = 0; t < tries; ++t) {
        ModuleMap theta = random_combination(basis, x, x, rng);
        Matrix span = ideal.flat;
        ModuleMap current = ModuleMap::identity(x);
        std::vector<Matrix> powers;
        bool independent = true;
        for (std::size_t k = 0; k < d; ++k) {
            Matrix v = current.flatten();
            if (column_space_contains(span, v)) {
                independent = false;
                break;
            }
            span = Matrix::hstack(span, v);
            powers.push_back(v);
            current = theta * current;
        }
        if (!independent)
            continue;
        auto c = span.solve(current.flatten());
        require(c.has_value(), ErrorKind::Internal, "End/J has larger dimension than expected");
        const std::uint32_t p = f.characteristic();
        std::vector<std::uint32_t> coeffs(d + 1, 0);
        for (std::size_t i = 0; i < d; ++i)
            coeffs[i] = (p - c->at(ideal.dim() + i, 0).residue()) % p;
        coeffs[d] = 1;
        if (is_irreducible(Poly(p, std::move(coeffs))))
            return true;
    }
    return false;
}

// A nontrivial Fitting split of x, or nullopt once x is certified to have a
// local endomorphism ring.
std::optional<FittingSplit> split_once(const Module& x, Rng& rng, std::size_t retries)
{
    auto basis = end_ring_basis(x);
    const std::size_t e = basis.size();
    for (std::size_t attempt = 0; attempt < e + retries; ++attempt) {
        ModuleMap phi = attempt < e ? basis[attempt] : random_combination(basis, x, x, rng);
        auto factors = irreducible_factors(minimal_polynomial(total_matrix(phi)), rng);
        if (factors.size() >= 2)
            return fitting_split(x, apply_poly(factors[0], phi));
        const bool scanned = attempt + 1 >= e;
        if (scanned && (attempt + 1 - e) % 8 == 0 && local_certificate(x, basis, rng, 16))
            return std::nullopt;
    }
    fail(ErrorKind::CertificationFailure, "could not split the module or certify it indecomposable within the retry budget");
}

}  // namespace

FittingSplit fitting_split(const Module& m, const ModuleMap& f)
{
    require(f.source() == m && f.target() == m, ErrorKind::InvalidModule, "Fitting split needs an endomorphism");
    ModuleMap g = map_power(f, std::max<std::size_t>(m.total_dim(), 1));
    Subobject k = kernel(g);
    Subobject i = image(g);
    auto sum = direct_sum(m.algebra_ptr(), {k.module, i.module});
    auto inv = copair(sum, {k.inclusion, i.inclusion}).inverse();
    require(inv.has_value(), ErrorKind::Internal, "Fitting decomposition is not direct");
    return {k, i, sum.projections[0] * *inv, sum.projections[1] * *inv};
}

Decomposition indecomposables(const Module& m, std::uint64_t seed, std::size_t retries)
{
    require(m.field().is_prime(), ErrorKind::RationalsUnsupported,
            "decomposition needs a prime field; splitting over the rationals would need rational factorization");
    Rng rng(seed);
    Decomposition out;
    std::function<void(const Module&, const ModuleMap&, const ModuleMap&)> visit =
        [&](const Module& x, const ModuleMap& inc, const ModuleMap& proj) {
            if (x.is_zero())
                return;
            auto split = split_once(x, rng, retries);
            if (!split) {
                out.summands.push_back({x, inc, proj});
                return;
            }
            visit(split->kernel.module, inc * split->kernel.inclusion, split->kernel_projection * proj);
            visit(split->image.module, inc * split->image.inclusion, split->image_projection * proj);
        };
    visit(m, ModuleMap::identity(m), ModuleMap::identity(m));
    std::vector<Module> parts;
    std::vector<ModuleMap> incs;
    for (const auto& s : out.summands) {
        parts.push_back(s.module);
        incs.push_back(s.inclusion);
    }
    auto sum = direct_sum(m.algebra_ptr(), parts);
    out.witness = parts.empty() ? ModuleMap::zero(sum.sum, m) : copair(sum, incs);
    require(verify_decomposition(m, out), ErrorKind::Internal, "decomposition witness failed to verify");
    return out;
}

bool certify_local_endomorphisms(const Module& m, std::uint64_t seed, std::size_t retries)
{
    require(m.field().is_prime(), ErrorKind::RationalsUnsupported, "local-ring certificates need a prime field");
    Rng rng(seed);
    return local_certificate(m, end_ring_basis(m), rng, retries);
}

bool verify_decomposition(const Module& m, const Decomposition& d)
{
    ModuleMap total = ModuleMap::zero(m, m);
    for (const auto& s : d.summands) {
        if (!(s.projection * s.inclusion == ModuleMap::identity(s.module)))
            return false;
        total = total + s.inclusion * s.projection;
    }
    return total == ModuleMap::identity(m) && d.witness.target() == m && d.witness.is_iso();
}

IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, std::size_t retries)
{
    require(same_algebra(m, n), ErrorKind::InvalidModule, "isomorphism test between modules over different algebras");
    if (m.dims() != n.dims())
        return {IsoVerdict::NotIsomorphic, std::nullopt, "dimension vectors differ"};
    if (m.is_zero())
        return {IsoVerdict::Isomorphic, ModuleMap::zero(m, n), "both modules are zero"};
    const std::size_t h = hom_dim(m, m);
    if (hom_dim(n, n) != h || hom_dim(m, n) != h || hom_dim(n, m) != h)
        return {IsoVerdict::NotIsomorphic, std::nullopt, "Hom dimensions differ"};

    Rng rng(seed);
    auto basis = hom_basis(m, n);
    for (std::size_t t = 0; t < retries; ++t) {
        ModuleMap f = random_combination(basis, m, n, rng);
        if (f.is_iso())
            return {IsoVerdict::Isomorphic, f, "random element of Hom is invertible"};
    }
    if (!m.field().is_prime())
        return {IsoVerdict::Unknown, std::nullopt, "random search exhausted over the rationals"};

    auto dm = indecomposables(m, rng.next(), retries);
    auto dn = indecomposables(n, rng.next(), retries);
    if (dm.summands.size() != dn.summands.size())
        return {IsoVerdict::NotIsomorphic, std::nullopt, "different numbers of indecomposable summands"};
    std::vector<bool> used(dn.summands.size(), false);
    ModuleMap iso = ModuleMap::zero(m, n);
    for (const auto& a : dm.summands) {
        bool matched = false;
        for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
            const auto& b = dn.summands[j];
            if (used[j] || a.module.dims() != b.module.dims())
                continue;
            // Local End: a and b are isomorphic iff some composite of basis
            // maps a -> b -> a is invertible.
            auto there = hom_basis(a.module, b.module);
            auto back = hom_basis(b.module, a.module);
            for (const auto& u : there) {
                for (const auto& v : back)
                    if ((v * u).is_iso()) {
                        iso = iso + b.inclusion * u * a.projection;
                        used[j] = matched = true;
                        break;
                    }
                if (matched)
                    break;
            }
        }
        if (!matched)
            return {IsoVerdict::NotIsomorphic, std::nullopt, "an indecomposable summand has no partner"};
    }
    require(iso.is_iso(), ErrorKind::Internal, "matched summands did not assemble to an isomorphism");
    return {IsoVerdict::Isomorphic, iso, "indecomposable summands matched"};
}

}  // namespace qres
