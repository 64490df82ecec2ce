#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qres {

// A prime field F_p (p < 2^31) or the rationals.
class Field {
public:
    static Field prime(std::uint64_t p);
    static Field rationals() { return Field(0); }
    // Accepts "Q", "QQ", "rational", or a prime written in decimal.
    static Field parse(std::string_view text);

    bool is_prime() const noexcept { return p_ != 0; }
    bool is_rational() const noexcept { return p_ == 0; }
    // Zero for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) noexcept { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

// A field element. Prime-field values are kept reduced in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::prime(2)), value_(0) {}
    Scalar(Field field, long long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f, 0LL); }
    static Scalar one(Field f) { return Scalar(f, 1LL); }
    // Integers, or "num/den" for the rationals.
    static Scalar parse(Field field, std::string_view text);

    Field field() const noexcept { return field_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    std::uint32_t residue() const;
    const mpq_class& rational() const noexcept { return value_; }

    Scalar inverse() const;
    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    Field field_;
    mpq_class value_;
};

}  // namespace qres
