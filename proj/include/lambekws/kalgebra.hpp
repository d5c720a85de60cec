#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lambekws/linalg.hpp"

namespace lambekws {

class ModalRelation;

/// A finite-dimensional algebra over a field, given by structure constants:
/// basis(i) * basis(j) = sc(i, j). The product extends bilinearly, so the
/// compatibility laws with vector addition and scalar action hold by
/// construction.
class KAlgebra {
public:
    KAlgebra(const Field& f, std::size_t dim, std::vector<std::string> basis_names,
             std::vector<std::vector<Vec>> sc);

    /// Hamilton product on basis {e1, i, j, k} over the rationals.
    static KAlgebra quaternions();
    /// Octonion product on basis {e0..e7} over the rationals.
    static KAlgebra octonions();
    /// Deterministic pseudo-random structure constants derived from the seed.
    static KAlgebra random(const Field& f, std::size_t dim, std::uint64_t seed,
                           std::size_t dim_bound = 16);
    /// All products zero.
    static KAlgebra zero_product(const Field& f, std::size_t dim);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& sc(std::size_t i, std::size_t j) const { return sc_[i][j]; }
    Vec basis_vec(std::size_t i) const { return Vec::unit(field_, dim_, i); }

    Vec star(const Vec& u, const Vec& v) const;

private:
    Field field_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> sc_;
};

enum class VerdictStatus { holds, fails, unknown };

/// Outcome of a first-order property check on an algebra. A `fails` verdict
/// carries a concrete witness tuple that refutes the defining clause; `holds`
/// over a finite field means the check was exhaustive; `unknown` can only
/// arise over the rationals (refutation search found nothing and no
/// structural certificate applies).
struct PseudoVerdict {
    VerdictStatus status = VerdictStatus::unknown;
    std::vector<Vec> witness;     // present iff status == fails
    std::vector<Scalar> scalars;  // uniform certificate scalars when status == holds
    std::string detail;
};

std::string to_string(VerdictStatus s);

struct CheckOptions {
    /// Upper bound on |F_p^dim| for exhaustive checks quantifying over
    /// pairs of vectors, and over triples/quadruples respectively.
    std::uint64_t max_space_pairs = 4096;
    std::uint64_t max_space_triples = 512;
    /// Number of seeded random vectors added to the rational refutation grid.
    std::size_t grid_random_samples = 16;
    std::uint64_t seed = 0;
};

/// Refutation grid used over the rationals: distinguished small-integer
/// witnesses for dimensions 4 and 8, basis vectors, pairwise basis sums, and
/// seeded random small rationals.
std::vector<Vec> rational_sample_grid(const KAlgebra& a, const CheckOptions& opts);

/// u * v = a (v * u) for some scalar a, for all u, v.
PseudoVerdict check_pseudo_commutative(const KAlgebra& a, const CheckOptions& opts = {});
/// (u*v)*w proportional to u*(v*w) in both existential directions, for all triples.
PseudoVerdict check_pseudo_associative(const KAlgebra& a, const CheckOptions& opts = {});
/// Some unit candidate 1 has u ~ u*1 and u ~ 1*u (proportionality both ways)
/// for all u. Over the rationals a candidate must be supplied; over finite
/// fields candidates are enumerated when none is given.
PseudoVerdict check_pseudo_unital(const KAlgebra& a, const std::optional<Vec>& candidate,
                                  const CheckOptions& opts = {});
/// u proportional to u*u for all u.
PseudoVerdict check_pseudo_contractive(const KAlgebra& a, const CheckOptions& opts = {});
/// u*v lies in span{u, v} for all u, v.
PseudoVerdict check_pseudo_expansive(const KAlgebra& a, const CheckOptions& opts = {});

enum class ModalPseudoProperty { right_associative, left_commutative };

/// First-order frame condition for the controlled structural rules: for all
/// u, w, z, v with v R z there are scalars a, b and v' with v' R (b z) such
/// that (u*w)*v = a (u*(w*v'))   [right-associative], or
///      (u*w)*v = a ((u*v')*w)   [left-commutative].
PseudoVerdict check_pseudo_modal(const KAlgebra& a, const ModalRelation& r,
                                 ModalPseudoProperty which, const CheckOptions& opts = {});

}  // namespace lambekws
