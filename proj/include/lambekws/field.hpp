#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lambekws {

/// Exact scalar domain: a prime field F_p or the rational numbers.
class Field {
public:
    enum class Kind { prime, rationals };

    static Field fp(std::uint32_t p);
    static Field f2() { return fp(2); }
    static Field rationals();

    Kind kind() const { return kind_; }
    bool finite() const { return kind_ == Kind::prime; }
    std::uint32_t modulus() const;

    bool operator==(const Field& other) const = default;

    std::string to_string() const;  // "F2", "F7", "Q"

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// An element of a Field. Arithmetic is exact; mixing fields throws.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), rep_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    /// num/den in the given field (den inverted mod p for prime fields).
    static Scalar fraction(const Field& f, long long num, long long den);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Residue in [0, p) for prime fields.
    std::uint64_t residue() const;
    const mpq_class& rational() const;

    std::string to_string() const;  // "3", "-2/5"

private:
    explicit Scalar(const Field& f) : field_(f), rep_(0) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::uint64_t rep_;  // prime-field residue
    mpq_class rat_;      // rational value
};

bool is_prime(std::uint32_t n);

}  // namespace lambekws
