#include "lambekws/field.hpp"

#include <stdexcept>

namespace lambekws {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::fp(std::uint32_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
    }
    return Field(Kind::prime, p);
}

Field Field::rationals() { return Field(Kind::rationals, 0); }

std::uint32_t Field::modulus() const {
    if (kind_ != Kind::prime) {
        throw std::logic_error("modulus() called on the rational field");
    }
    return p_;
}

std::string Field::to_string() const {
    return kind_ == Kind::prime ? "F" + std::to_string(p_) : "Q";
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
    Scalar s(f);
    if (f.finite()) {
        long long p = f.modulus();
        long long r = v % p;
        if (r < 0) r += p;
        s.rep_ = static_cast<std::uint64_t>(r);
    } else {
        s.rat_ = mpq_class(static_cast<long>(v));
    }
    return s;
}

Scalar Scalar::fraction(const Field& f, long long num, long long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (f.finite()) {
        return from_int(f, num) / from_int(f, den);
    }
    Scalar s(f);
    s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    s.rat_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return field_.finite() ? rep_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.finite() ? rep_ == 1 % field_.modulus() : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) {
        throw std::invalid_argument("scalar field mismatch: " + field_.to_string() + " vs " +
                                    o.field_.to_string());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.finite()) {
        r.rep_ = (rep_ + o.rep_) % field_.modulus();
    } else {
        r.rat_ = rat_ + o.rat_;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r(field_);
    if (field_.finite()) {
        r.rep_ = (rep_ * o.rep_) % field_.modulus();
    } else {
        r.rat_ = rat_ * o.rat_;
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.finite()) {
        r.rep_ = rep_ == 0 ? 0 : field_.modulus() - rep_;
    } else {
        r.rat_ = -rat_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r(field_);
    if (field_.finite()) {
        // Fermat: a^(p-2) mod p.
        std::uint64_t p = field_.modulus();
        std::uint64_t base = rep_, acc = 1, e = p - 2;
        while (e > 0) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        r.rep_ = acc;
    } else {
        r.rat_ = 1 / rat_;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.finite() ? rep_ == o.rep_ : rat_ == o.rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.finite()) throw std::logic_error("residue() on a rational scalar");
    return rep_;
}

const mpq_class& Scalar::rational() const {
    if (field_.finite()) throw std::logic_error("rational() on a prime-field scalar");
    return rat_;
}

std::string Scalar::to_string() const {
    return field_.finite() ? std::to_string(rep_) : rat_.get_str();
}

}  // namespace lambekws
