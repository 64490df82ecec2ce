#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qres/matrix.hpp"

namespace qres {

class Rng;

// Dense univariate polynomial over F_p, coefficients from the constant term
// up, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    static Poly constant(std::uint32_t p, std::uint32_t c);
    static Poly x(std::uint32_t p);

    std::uint32_t prime() const { return p_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    // Quotient and remainder; b must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

private:
    void trim();

    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

// Monic gcd.
Poly gcd(Poly a, Poly b);
// a^e mod f.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& f);
// Product of the distinct monic irreducible factors.
Poly squarefree_radical(const Poly& f);
// Distinct-degree factorization of a monic squarefree polynomial: pairs of
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, long>> distinct_degree_factors(const Poly& f);
// Splits a monic squarefree product of irreducibles of degree d.
std::vector<Poly> equal_degree_factors(const Poly& f, long d, Rng& rng);
// Distinct monic irreducible factors, sorted by degree then coefficients.
std::vector<Poly> irreducible_factors(const Poly& f, Rng& rng);
bool is_irreducible(const Poly& f);

// Minimal polynomial of a square matrix over a prime field.
Poly minimal_polynomial(const Matrix& a);
Matrix evaluate(const Poly& f, const Matrix& a);

}  // namespace qres
