#include "qres/field.hpp"

#include <charconv>

#include "qres/error.hpp"

namespace qres {

namespace {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    require(p < (1ULL << 31) && is_prime_number(p), ErrorKind::InvalidParameters,
            "field characteristic must be a prime below 2^31, got " + std::to_string(p));
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text)
{
    if (text == "Q" || text == "QQ" || text == "rational" || text == "rationals")
        return rationals();
    if (text.size() > 2 && (text.substr(0, 2) == "F_" || text.substr(0, 2) == "GF"))
        text.remove_prefix(2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(ErrorKind::ParseError, "cannot read field '" + std::string(text) + "'");
    return prime(p);
}

std::string Field::to_string() const
{
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    require(a % p != 0, ErrorKind::PreconditionViolation, "inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

namespace {

mpq_class reduce(Field f, const mpq_class& v)
{
    if (f.is_rational())
        return v;
    const unsigned long p = f.characteristic();
    mpz_class den = v.get_den() % p;
    require(den != 0, ErrorKind::ParseError, "denominator divisible by the characteristic");
    mpz_class num = v.get_num() % p;
    if (num < 0)
        num += p;
    std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
    std::uint64_t r = static_cast<std::uint64_t>(num.get_ui()) * inverse_mod(d, f.characteristic()) % p;
    return mpq_class(static_cast<unsigned long>(r));
}

}  // namespace

Scalar::Scalar(Field field, long long value) : field_(field)
{
    if (field.is_rational()) {
        value_ = mpq_class(static_cast<long>(value));
    } else {
        long long p = field.characteristic();
        long long r = value % p;
        if (r < 0)
            r += p;
        value_ = mpq_class(static_cast<unsigned long>(r));
    }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(reduce(field, value))
{
    value_.canonicalize();
}

Scalar Scalar::parse(Field field, std::string_view text)
{
    std::string s(text);
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        fail(ErrorKind::ParseError, "cannot read scalar '" + s + "'");
    v.canonicalize();
    return Scalar(field, v);
}

std::uint32_t Scalar::residue() const
{
    return static_cast<std::uint32_t>(value_.get_num().get_ui());
}

Scalar Scalar::inverse() const
{
    require(!is_zero(), ErrorKind::PreconditionViolation, "inverse of zero");
    if (field_.is_rational())
        return Scalar(field_, mpq_class(1) / value_);
    return Scalar(field_, static_cast<long long>(inverse_mod(residue(), field_.characteristic())));
}

Scalar Scalar::operator-() const
{
    return Scalar(field_, mpq_class(-value_));
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    return Scalar(a.field_, mpq_class(a.value_ + b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    return Scalar(a.field_, mpq_class(a.value_ - b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    return Scalar(a.field_, mpq_class(a.value_ * b.value_));
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return a * b.inverse();
}

std::string Scalar::to_string() const
{
    return value_.get_str();
}

}  // namespace qres
