#include "qres/poly.hpp"

#include <algorithm>

#include "qres/error.hpp"
#include "qres/rng.hpp"

namespace qres {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return a >= b ? a - b : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) + p - b);
}

}  // namespace

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& c : c_)
        c %= p_;
    trim();
}

Poly Poly::constant(std::uint32_t p, std::uint32_t c)
{
    return Poly(p, {c});
}

Poly Poly::x(std::uint32_t p)
{
    return Poly(p, {0, 1});
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::monic() const
{
    if (c_.empty())
        return *this;
    std::uint32_t inv = inverse_mod(lead(), p_);
    Poly out = *this;
    for (auto& c : out.c_)
        c = mulm(c, inv, p_);
    return out;
}

Poly Poly::derivative() const
{
    std::vector<std::uint32_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(mulm(c_[i], static_cast<std::uint32_t>(i % p_), p_));
    return Poly(p_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = addm(a[i], b[i], a.p_);
    return Poly(a.p_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b)
{
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = subm(a[i], b[i], a.p_);
    return Poly(a.p_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly(a.p_, {});
    std::vector<std::uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = addm(c[i + j], mulm(a.c_[i], b.c_[j], a.p_), a.p_);
    return Poly(a.p_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b)
{
    require(!b.is_zero(), ErrorKind::Internal, "polynomial division by zero");
    const std::uint32_t p = a.p_;
    std::vector<std::uint32_t> r = a.c_;
    if (r.size() < b.c_.size())
        return {Poly(p, {}), a};
    std::vector<std::uint32_t> q(r.size() - b.c_.size() + 1, 0);
    const std::uint32_t inv = inverse_mod(b.lead(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        std::uint32_t coef = mulm(r[k + b.c_.size() - 1], inv, p);
        q[k] = coef;
        if (coef == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[k + j] = subm(r[k + j], mulm(coef, b.c_[j], p), p);
    }
    return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& f)
{
    Poly result = Poly::constant(f.prime(), 1) % f;
    Poly base = a % f;
    while (e) {
        if (e & 1)
            result = (result * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return result;
}

namespace {

// f(x) = g(x^p) -> g, using a^p = a on F_p.
Poly pth_root(const Poly& f)
{
    const std::uint32_t p = f.prime();
    std::vector<std::uint32_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(f.coeffs()[i]);
    return Poly(p, std::move(c));
}

bool is_one(const Poly& f)
{
    return f.degree() == 0;
}

}  // namespace

Poly squarefree_radical(const Poly& f)
{
    const std::uint32_t p = f.prime();
    if (f.degree() <= 0)
        return Poly::constant(p, 1);
    Poly m = f.monic();
    Poly d = m.derivative();
    if (d.is_zero())
        return squarefree_radical(pth_root(m));
    Poly c = gcd(m, d);
    Poly w = m / c;
    // Strip from c every factor already in w; what is left is a p-th power.
    for (Poly y = gcd(c, w); !is_one(y); y = gcd(c, w))
        c = c / y;
    if (is_one(c))
        return w.monic();
    return (w * squarefree_radical(pth_root(c))).monic();
}

std::vector<std::pair<Poly, long>> distinct_degree_factors(const Poly& f)
{
    const std::uint32_t p = f.prime();
    std::vector<std::pair<Poly, long>> out;
    Poly rest = f.monic();
    Poly h = Poly::x(p) % rest;
    for (long d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, p, rest);
        Poly g = gcd(rest, h - Poly::x(p));
        if (!is_one(g)) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest, rest.degree());
    return out;
}

std::vector<Poly> equal_degree_factors(const Poly& f, long d, Rng& rng)
{
    const std::uint32_t p = f.prime();
    if (f.degree() <= d)
        return {f.monic()};
    for (;;) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()));
        for (auto& x : c)
            x = static_cast<std::uint32_t>(rng.below(p));
        Poly a(p, std::move(c));
        if (a.degree() <= 0)
            continue;
        Poly b;
        if (p == 2) {
            // trace a + a^2 + ... + a^(2^(d-1))
            Poly t = a;
            b = a;
            for (long i = 1; i < d; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            Poly t = a;
            Poly norm = a;
            for (long i = 1; i < d; ++i) {
                t = powmod(t, p, f);
                norm = (norm * t) % f;
            }
            b = powmod(norm, (p - 1) / 2, f) - Poly::constant(p, 1);
        }
        Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factors(g, d, rng);
            auto right = equal_degree_factors(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Poly> irreducible_factors(const Poly& f, Rng& rng)
{
    std::vector<Poly> out;
    if (f.degree() <= 0)
        return out;
    for (const auto& [g, d] : distinct_degree_factors(squarefree_radical(f)))
        for (auto& h : equal_degree_factors(g, d, rng))
            out.push_back(h.monic());
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                            b.coeffs().rend());
    });
    return out;
}

bool is_irreducible(const Poly& f)
{
    if (f.degree() <= 0)
        return false;
    if (!(squarefree_radical(f) == f.monic()))
        return false;
    auto ddf = distinct_degree_factors(f);
    return ddf.size() == 1 && ddf[0].second == f.degree();
}

Poly minimal_polynomial(const Matrix& a)
{
    require(a.rows() == a.cols(), ErrorKind::DimensionMismatch, "minimal polynomial of a non-square matrix");
    require(a.field().is_prime(), ErrorKind::RationalsUnsupported, "polynomials are only supported over F_p");
    const Field f = a.field();
    const std::uint32_t p = f.characteristic();
    const std::size_t n = a.rows();
    if (n == 0)
        return Poly::constant(p, 1);
    std::vector<Matrix> powers{Matrix::identity(f, n).flatten()};
    Matrix current = Matrix::identity(f, n);
    for (std::size_t k = 1; k <= n; ++k) {
        current = a * current;
        Matrix stacked = Matrix::hstack(f, n * n, powers);
        auto c = stacked.solve(current.flatten());
        if (c) {
            // a^k = sum c_i a^i
            std::vector<std::uint32_t> coeffs(k + 1, 0);
            for (std::size_t i = 0; i < k; ++i)
                coeffs[i] = (p - c->at(i, 0).residue()) % p;
            coeffs[k] = 1;
            return Poly(p, std::move(coeffs));
        }
        powers.push_back(current.flatten());
    }
    fail(ErrorKind::Internal, "no polynomial relation found up to the matrix size");
}

Matrix evaluate(const Poly& f, const Matrix& a)
{
    const Field field = a.field();
    Matrix out(field, a.rows(), a.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        out = a * out + Matrix::identity(field, a.rows()).scaled(Scalar(field, static_cast<long long>(f.coeffs()[i])));
    return out;
}

}  // namespace qres
