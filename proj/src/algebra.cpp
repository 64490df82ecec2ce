#include "qres/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qres/error.hpp"

namespace qres {

namespace {

bool path_less(const Path& a, const Path& b)
{
    if (a.length() != b.length())
        return a.length() < b.length();
    if (a.length() == 0)
        return a.source < b.source;
    return a.arrows < b.arrows;
}

}  // namespace

AlgebraPtr QuiverAlgebra::create(Field field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                 std::vector<Relation> relations, std::size_t max_length)
{
    std::shared_ptr<QuiverAlgebra> alg(
        new QuiverAlgebra(field, std::move(vertices), std::move(arrows), std::move(relations)));
    alg->validate();
    alg->compute_basis(max_length);
    return alg;
}

AlgebraPtr QuiverAlgebra::create(Field field, std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
                                 const std::vector<std::vector<TermSpec>>& relations, std::size_t max_length)
{
    auto find_vertex = [&](const std::string& name) {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end())
            fail(ErrorKind::UnknownVertex, "no vertex named '" + name + "'");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> indexed;
    for (const auto& a : arrows)
        indexed.push_back({a.name, find_vertex(a.source), find_vertex(a.target)});
    auto find_arrow = [&](const std::string& name) {
        for (std::size_t i = 0; i < indexed.size(); ++i)
            if (indexed[i].name == name)
                return i;
        fail(ErrorKind::InvalidAlgebra, "no arrow named '" + name + "'");
    };
    std::vector<Relation> rels;
    for (const auto& r : relations) {
        Relation rel;
        for (const auto& t : r) {
            RelationTerm term{Scalar(field, t.coeff), {}};
            for (const auto& name : t.path)
                term.arrows.push_back(find_arrow(name));
            rel.push_back(std::move(term));
        }
        rels.push_back(std::move(rel));
    }
    return create(field, std::move(vertices), std::move(indexed), std::move(rels), max_length);
}

QuiverAlgebra::QuiverAlgebra(Field field, std::vector<std::string> vertices, std::vector<Arrow> arrows,
                             std::vector<Relation> relations)
    : field_(field), vertices_(std::move(vertices)), arrows_(std::move(arrows)), relations_(std::move(relations))
{
}

void QuiverAlgebra::validate() const
{
    std::set<std::string> names(vertices_.begin(), vertices_.end());
    require(names.size() == vertices_.size(), ErrorKind::InvalidAlgebra, "duplicate vertex names");
    std::set<std::string> arrow_names;
    for (const auto& a : arrows_) {
        require(a.source < vertices_.size() && a.target < vertices_.size(), ErrorKind::UnknownVertex,
                "arrow '" + a.name + "' has an endpoint outside the quiver");
        require(arrow_names.insert(a.name).second, ErrorKind::InvalidAlgebra, "duplicate arrow name '" + a.name + "'");
    }
    for (const auto& rel : relations_) {
        require(!rel.empty(), ErrorKind::InvalidAlgebra, "empty relation");
        std::size_t src = 0, tgt = 0;
        for (std::size_t k = 0; k < rel.size(); ++k) {
            const auto& term = rel[k];
            require(term.coeff.field() == field_, ErrorKind::InvalidAlgebra, "relation coefficient from another field");
            require(term.arrows.size() >= 2, ErrorKind::InvalidAlgebra,
                    "relation terms must be paths of length at least two");
            for (auto a : term.arrows)
                require(a < arrows_.size(), ErrorKind::InvalidAlgebra, "relation uses an unknown arrow");
            for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i)
                require(arrows_[term.arrows[i]].target == arrows_[term.arrows[i + 1]].source,
                        ErrorKind::InvalidAlgebra, "relation term is not a path");
            std::size_t s = arrows_[term.arrows.front()].source, t = arrows_[term.arrows.back()].target;
            if (k == 0) {
                src = s;
                tgt = t;
            }
            require(s == src && t == tgt, ErrorKind::InvalidAlgebra, "relation terms have different endpoints");
        }
    }
}

void QuiverAlgebra::compute_basis(std::size_t max_length)
{
    const std::size_t nv = vertices_.size();
    out_.assign(nv, {});
    in_.assign(nv, {});
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        out_[arrows_[a].source].push_back(a);
        in_[arrows_[a].target].push_back(a);
    }

    {
        std::vector<std::size_t> indeg(nv, 0);
        for (const auto& a : arrows_)
            ++indeg[a.target];
        std::vector<std::size_t> stack;
        for (std::size_t v = 0; v < nv; ++v)
            if (!indeg[v])
                stack.push_back(v);
        std::size_t seen = 0;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            ++seen;
            for (auto a : out_[v])
                if (--indeg[arrows_[a].target] == 0)
                    stack.push_back(arrows_[a].target);
        }
        acyclic_ = seen == nv;
    }

    std::vector<std::vector<Path>> levels(1);
    for (std::size_t v = 0; v < nv; ++v)
        levels[0].push_back({v, v, {}});
    auto extend = [&]() {
        std::vector<Path> next;
        for (const auto& p : levels.back())
            for (auto a : out_[p.target]) {
                Path q = p;
                q.arrows.push_back(a);
                q.target = arrows_[a].target;
                next.push_back(std::move(q));
            }
        std::sort(next.begin(), next.end(), path_less);
        levels.push_back(std::move(next));
    };

    struct Indexed {
        std::vector<Path> paths;
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    };
    auto index_upto = [&](std::size_t len) {
        Indexed out;
        for (std::size_t l = 0; l <= len && l < levels.size(); ++l)
            for (const auto& p : levels[l]) {
                out.index[{p.source, p.arrows}] = out.paths.size();
                out.paths.push_back(p);
            }
        return out;
    };
    std::vector<std::size_t> relation_min(relations_.size());
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        std::size_t m = relations_[r][0].arrows.size();
        for (const auto& t : relations_[r])
            m = std::min(m, t.arrows.size());
        relation_min[r] = m;
    }
    // Rows of the projections of p*r*q to paths of length <= len (or < len
    // when strict), with column c standing for path index (n-1-c).
    auto generators = [&](const Indexed& ix, std::size_t len, bool strict) {
        const std::size_t n = ix.paths.size();
        std::vector<Matrix> rows;
        auto fits = [&](std::size_t l) { return strict ? l < len : l <= len; };
        for (std::size_t r = 0; r < relations_.size(); ++r) {
            const auto& rel = relations_[r];
            std::size_t src = arrows_[rel[0].arrows.front()].source;
            std::size_t tgt = arrows_[rel[0].arrows.back()].target;
            for (const auto& p : ix.paths) {
                if (p.target != src || !fits(p.length() + relation_min[r]))
                    continue;
                for (const auto& q : ix.paths) {
                    if (q.source != tgt || !fits(p.length() + relation_min[r] + q.length()))
                        continue;
                    Matrix row(field_, 1, n);
                    for (const auto& term : rel) {
                        std::vector<std::size_t> w = p.arrows;
                        w.insert(w.end(), term.arrows.begin(), term.arrows.end());
                        w.insert(w.end(), q.arrows.begin(), q.arrows.end());
                        if (!fits(w.size()))
                            continue;
                        std::size_t start = w.empty() ? p.source : arrows_[w.front()].source;
                        std::size_t idx = ix.index.at({start, w});
                        row.set(0, n - 1 - idx, row.at(0, n - 1 - idx) + term.coeff);
                    }
                    if (!row.is_zero())
                        rows.push_back(std::move(row));
                }
            }
        }
        return Matrix::vstack(field_, n, rows);
    };

    std::size_t t = 1;
    for (;; ++t) {
        require(t <= max_length, ErrorKind::InvalidAlgebra,
                "relations do not make all paths of length " + std::to_string(max_length) + " vanish");
        while (levels.size() <= t)
            extend();
        if (levels[t].empty())
            break;
        if (relations_.empty())
            continue;
        Indexed ix = index_upto(t);
        Matrix gens = generators(ix, t, false);
        const std::size_t n = ix.paths.size();
        Matrix top(field_, levels[t].size(), n);
        for (std::size_t i = 0; i < levels[t].size(); ++i)
            top.set(i, n - 1 - ix.index.at({levels[t][i].source, levels[t][i].arrows}), 1);
        if (Matrix::vstack(gens, top).rank() == gens.rank())
            break;
    }
    vanishing_length_ = t;

    Indexed ix = index_upto(t - 1);
    paths_ = ix.paths;
    path_index_ = ix.index;
    const std::size_t n = paths_.size();
    Matrix gens = generators(ix, t, true);
    auto [reduced, pivots] = gens.rref();
    std::vector<bool> leading(n, false);
    for (auto c : pivots)
        leading[n - 1 - c] = true;
    std::vector<std::size_t> basis_pos(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!leading[i]) {
            basis_pos[i] = basis_.size();
            basis_.push_back(paths_[i]);
        }
    normal_forms_ = Matrix(field_, basis_.size(), n);
    for (std::size_t i = 0; i < n; ++i)
        if (!leading[i])
            normal_forms_.set(basis_pos[i], i, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        std::size_t lead = n - 1 - pivots[r];
        for (std::size_t c = pivots[r] + 1; c < n; ++c) {
            std::size_t idx = n - 1 - c;
            if (!reduced.is_zero_at(r, c) && !leading[idx])
                normal_forms_.set(basis_pos[idx], lead, -reduced.at(r, c));
        }
    }

    between_.assign(nv * nv, {});
    local_index_.assign(basis_.size(), 0);
    trivial_.assign(nv, 0);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        auto& list = between_[basis_[b].source * nv + basis_[b].target];
        local_index_[b] = list.size();
        list.push_back(b);
        if (basis_[b].length() == 0)
            trivial_[basis_[b].source] = b;
    }
    right_action_.clear();
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        Matrix act(field_, basis_.size(), basis_.size());
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            if (basis_[b].target != arrows_[a].source || basis_[b].length() + 1 >= t)
                continue;
            std::vector<std::size_t> w = basis_[b].arrows;
            w.push_back(a);
            act.set_block(0, b, normal_forms_.col(path_index_.at({basis_[b].source, w})));
        }
        right_action_.push_back(std::move(act));
    }

    std::ostringstream fp;
    fp << field_.to_string() << "|";
    for (const auto& v : vertices_)
        fp << v << ",";
    fp << "|";
    for (const auto& a : arrows_)
        fp << a.name << ":" << a.source << ">" << a.target << ",";
    fp << "|";
    for (const auto& rel : relations_) {
        for (const auto& term : rel) {
            fp << term.coeff.to_string() << "*";
            for (auto a : term.arrows)
                fp << a << ".";
            fp << "+";
        }
        fp << ";";
    }
    fingerprint_ = fp.str();
}

std::size_t QuiverAlgebra::vertex_index(const std::string& name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end())
        fail(ErrorKind::UnknownVertex, "no vertex named '" + name + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t QuiverAlgebra::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name)
            return i;
    fail(ErrorKind::InvalidAlgebra, "no arrow named '" + name + "'");
}

Matrix QuiverAlgebra::normal_form(const Path& path) const
{
    for (std::size_t i = 0; i + 1 < path.arrows.size(); ++i)
        require(arrows_[path.arrows[i]].target == arrows_[path.arrows[i + 1]].source, ErrorKind::InvalidParameters,
                "not a path");
    if (path.length() >= vanishing_length_)
        return Matrix(field_, basis_.size(), 1);
    return normal_forms_.col(path_index_.at({path.source, path.arrows}));
}

AlgebraPtr QuiverAlgebra::opposite() const
{
    std::call_once(opposite_once_, [this] {
        std::vector<Arrow> arrows;
        for (const auto& a : arrows_)
            arrows.push_back({a.name, a.target, a.source});
        std::vector<Relation> rels = relations_;
        for (auto& rel : rels)
            for (auto& term : rel)
                std::reverse(term.arrows.begin(), term.arrows.end());
        opposite_ = create(field_, vertices_, std::move(arrows), std::move(rels), vanishing_length_ + 1);
    });
    return opposite_;
}

std::string QuiverAlgebra::path_name(const Path& path) const
{
    if (path.arrows.empty())
        return "e_" + vertices_[path.source];
    std::string out;
    for (std::size_t i = 0; i < path.arrows.size(); ++i)
        out += (i ? "*" : "") + arrows_[path.arrows[i]].name;
    return out;
}

AlgebraPtr linear_quiver(Field field, std::size_t n)
{
    require(n >= 1, ErrorKind::InvalidParameters, "linear quiver needs a vertex");
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i)
        vertices.push_back(std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < n; ++i)
        arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return QuiverAlgebra::create(field, std::move(vertices), std::move(arrows));
}

AlgebraPtr field_algebra(Field field)
{
    return QuiverAlgebra::create(field, {"1"}, std::vector<Arrow>{});
}

}  // namespace qres
