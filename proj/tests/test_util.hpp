#pragma once

// Shared helpers for the test suites: deterministic generators and small
// brute-force oracles kept independent of the library's computation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "lambekws/kalgebra.hpp"
#include "lambekws/linalg.hpp"

namespace lambekws::testutil {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
};

inline Vec random_vector(Rng& rng, const Field& f, std::size_t dim) {
    std::vector<Scalar> c;
    c.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (f.finite()) {
            c.push_back(Scalar::from_int(f, static_cast<long long>(rng.below(f.modulus()))));
        } else {
            c.push_back(Scalar::fraction(f, static_cast<long long>(rng.below(7)) - 3,
                                         1 + static_cast<long long>(rng.below(2))));
        }
    }
    return Vec(f, std::move(c));
}

inline std::vector<Vec> random_vectors(Rng& rng, const Field& f, std::size_t dim,
                                       std::size_t count) {
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_vector(rng, f, dim));
    return out;
}

inline Subspace random_subspace(Rng& rng, const Field& f, std::size_t dim) {
    return Subspace::span(f, dim, random_vectors(rng, f, dim, 1 + rng.below(dim + 1)));
}

/// Membership oracle: v is a linear combination of the listed vectors,
/// decided by enumerating all coefficient tuples (finite fields, tiny ranks).
inline bool member_by_enumeration(const Vec& v, const std::vector<Vec>& gens) {
    const Field& f = v.field();
    std::uint64_t p = f.modulus();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec acc = Vec::zero(f, v.dim());
        std::uint64_t rest = idx;
        for (const Vec& g : gens) {
            std::uint64_t digit = rest % p;
            rest /= p;
            if (digit) acc = acc + g.scaled(Scalar::from_int(f, static_cast<long long>(digit)));
        }
        if (acc == v) return true;
    }
    return false;
}

/// Set of all elements of a subspace, via coefficient enumeration over the
/// given generators (not necessarily a basis).
inline std::vector<Vec> span_elements_by_enumeration(const Field& f, std::size_t dim,
                                                     const std::vector<Vec>& gens) {
    std::vector<Vec> out;
    std::uint64_t p = f.modulus();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec acc = Vec::zero(f, dim);
        std::uint64_t rest = idx;
        for (const Vec& g : gens) {
            std::uint64_t digit = rest % p;
            rest /= p;
            if (digit) acc = acc + g.scaled(Scalar::from_int(f, static_cast<long long>(digit)));
        }
        bool seen = false;
        for (const Vec& x : out) {
            if (x == acc) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace lambekws::testutil
