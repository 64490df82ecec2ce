#include "qres/random.hpp"

namespace qres {

namespace {

std::vector<Matrix> random_vectors(const Module& m, Rng& rng, std::size_t count)
{
    std::vector<Matrix> gens;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        gens.emplace_back(m.field(), m.dim(v), 0);
    std::vector<std::size_t> nonzero;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        if (m.dim(v))
            nonzero.push_back(v);
    if (nonzero.empty())
        return gens;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t v = nonzero[rng.below(nonzero.size())];
        gens[v] = Matrix::hstack(gens[v], Matrix::random(m.field(), m.dim(v), 1, rng));
    }
    return gens;
}

}  // namespace

Subobject random_submodule(const Module& m, Rng& rng, std::size_t generators)
{
    return generated_submodule(m, random_vectors(m, rng, generators));
}

ModuleMap random_hom(const Module& m, const Module& n, Rng& rng)
{
    return random_combination(hom_basis(m, n), m, n, rng);
}

std::pair<Module, ModuleMap> random_rebase(const Module& m, Rng& rng)
{
    std::vector<Matrix> g, ginv;
    for (auto d : m.dims()) {
        for (;;) {
            Matrix c = Matrix::random(m.field(), d, d, rng);
            if (auto inv = c.inverse()) {
                g.push_back(std::move(c));
                ginv.push_back(std::move(*inv));
                break;
            }
        }
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < m.algebra().arrows().size(); ++a) {
        const auto& arr = m.algebra().arrows()[a];
        maps.push_back(g[arr.target] * m.arrow(a) * ginv[arr.source]);
    }
    Module n(m.algebra_ptr(), m.dims(), std::move(maps));
    ModuleMap iso(m, n, std::move(g));
    return {std::move(n), std::move(iso)};
}

Module random_module(const AlgebraPtr& algebra, Rng& rng, std::size_t max_total)
{
    const auto& alg = *algebra;
    const std::size_t nv = alg.vertex_count();
    if (alg.relations().empty() && alg.is_acyclic()) {
        std::size_t total = rng.below(max_total + 1);
        std::vector<std::size_t> dims(nv, 0);
        for (std::size_t i = 0; i < total; ++i)
            ++dims[rng.below(nv)];
        std::vector<Matrix> maps;
        for (const auto& a : alg.arrows()) {
            Matrix m = Matrix::random(alg.field(), dims[a.target], dims[a.source], rng);
            if (rng.coin(1, 4) && m.rows() && m.cols())
                m.set_block(0, 0, Matrix(alg.field(), m.rows(), 1));
            maps.push_back(std::move(m));
        }
        return Module(algebra, std::move(dims), std::move(maps));
    }
    // Subquotients of sums of indecomposable projectives and injectives; keep
    // the largest one that fits, stopping once a random target size is met.
    const std::size_t wanted = rng.below(max_total + 1);
    Module best = Module::zero(algebra);
    for (int attempt = 0; attempt < 64 && best.total_dim() < wanted; ++attempt) {
        std::vector<Module> parts;
        std::size_t count = 1 + rng.below(4);
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t v = rng.below(nv);
            parts.push_back(rng.coin() ? projective(algebra, v) : injective(algebra, v));
        }
        Module sum = direct_sum(algebra, parts).sum;
        if (rng.coin(2, 3))
            sum = random_submodule(sum, rng, 1 + rng.below(3)).module;
        Module result = quotient(sum, random_submodule(sum, rng, rng.below(3)).inclusion.components()).module;
        if (result.total_dim() <= max_total && result.total_dim() > best.total_dim())
            best = result;
    }
    return best;
}

}  // namespace qres
