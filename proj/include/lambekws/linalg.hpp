#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lambekws/field.hpp"

namespace lambekws {

/// A coordinate vector over a fixed field. Immutable after construction.
class Vec {
public:
    Vec(const Field& f, std::vector<Scalar> coords);
    static Vec zero(const Field& f, std::size_t dim);
    static Vec unit(const Field& f, std::size_t dim, std::size_t i);
    static Vec from_ints(const Field& f, const std::vector<long long>& coords);

    const Field& field() const { return field_; }
    std::size_t dim() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator-() const;
    Vec scaled(const Scalar& a) const;

    bool is_zero() const;
    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    std::string to_string() const;  // "(1,0,2)"

private:
    Field field_;
    std::vector<Scalar> coords_;
};

/// If x = a*y for some scalar a, returns such an a (convention: y = 0 admits
/// a solution iff x = 0). Otherwise nullopt.
std::optional<Scalar> solve_proportional(const Vec& x, const Vec& y);

/// A square matrix acting on column vectors of the same ambient dimension.
class LinearMap {
public:
    LinearMap(const Field& f, std::vector<std::vector<Scalar>> rows);
    static LinearMap identity(const Field& f, std::size_t dim);
    static LinearMap from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
    /// Matrix whose i-th column is col(i); used to build u |-> u * w maps.
    static LinearMap from_columns(const Field& f, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    std::size_t dim() const { return rows_.size(); }
    const Scalar& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

    Vec apply(const Vec& v) const;
    bool operator==(const LinearMap& o) const;
    std::string to_string() const;

private:
    Field field_;
    std::vector<std::vector<Scalar>> rows_;
};

struct RrefResult {
    std::vector<Vec> basis;  // reduced row-echelon, no zero rows
    std::size_t rank = 0;
};

/// Canonical reduced row-echelon basis of the row span. Deterministic: the
/// result depends only on the spanned subspace.
RrefResult rref(const Field& f, std::size_t dim, const std::vector<Vec>& rows);

/// Basis of {x | M x = 0} for the matrix whose rows are given (rows may be
/// rectangular: each row has length `dim`).
std::vector<Vec> kernel_basis(const Field& f, std::size_t dim, const std::vector<Vec>& rows);

/// A linear subspace in canonical form: equal subspaces compare equal as
/// representations.
class Subspace {
public:
    static Subspace zero(const Field& f, std::size_t dim);
    static Subspace full(const Field& f, std::size_t dim);
    static Subspace span(const Field& f, std::size_t dim, const std::vector<Vec>& vs);
    static Subspace line(const Vec& v) { return span(v.field(), v.dim(), {v}); }

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& s) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace join(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    /// Basis of {c | c . b = 0 for every b in this subspace}.
    Subspace annihilator() const;

    /// All p^rank elements (finite fields only).
    std::vector<Vec> elements() const;

    std::string to_string() const;
    std::string key() const;  // canonical identity string

private:
    Subspace(const Field& f, std::size_t dim, std::vector<Vec> basis);
    Field field_;
    std::size_t dim_;
    std::vector<Vec> basis_;
};

/// Solution subspace of simultaneous membership constraints:
/// { u | map_i(u) lies in space_i for every i }.
Subspace solve_membership_constraints(const Field& f, std::size_t dim,
                                      const std::vector<std::pair<LinearMap, Subspace>>& constraints);

/// Streams every subspace of F_p^dim exactly once, in a fixed order
/// (by rank, then pivot columns, then free entries). Throws for infinite
/// fields or dim beyond the bound.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(const Field& f, std::size_t dim, std::size_t dim_bound = 5);
    std::optional<Subspace> next();

private:
    bool advance_assignment();
    bool advance_pivots();
    Subspace current() const;

    Field field_;
    std::size_t dim_;
    std::size_t rank_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_slots_;        // flattened (row, col) free positions
    std::vector<std::uint32_t> assignment_;      // field residue per free slot
    bool done_ = false;
    bool fresh_ = true;
};

std::vector<Subspace> all_subspaces(const Field& f, std::size_t dim, std::size_t dim_bound = 5);

/// All p^dim vectors of F_p^dim in mixed-radix order (index i maps to digits
/// of i base p, least significant digit = coordinate 0).
std::vector<Vec> all_vectors(const Field& f, std::size_t dim, std::size_t space_bound = 1u << 20);

/// Mixed-radix pack/unpack between vectors and indices in [0, p^dim).
std::uint64_t pack_vector(const Vec& v);
Vec unpack_vector(const Field& f, std::size_t dim, std::uint64_t index);

}  // namespace lambekws
