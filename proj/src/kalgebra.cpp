#include "lambekws/kalgebra.hpp"

#include <random>
#include <stdexcept>

#include "dense_space.hpp"
#include "lambekws/relation.hpp"

namespace lambekws {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::fails: return "fails";
        case VerdictStatus::unknown: return "unknown";
    }
    return "";
}

KAlgebra::KAlgebra(const Field& f, std::size_t dim, std::vector<std::string> basis_names,
                   std::vector<std::vector<Vec>> sc)
    : field_(f), dim_(dim), names_(std::move(basis_names)), sc_(std::move(sc)) {
    if (names_.size() != dim_) throw std::invalid_argument("basis name count != dim");
    if (sc_.size() != dim_) throw std::invalid_argument("structure constant table must be dim x dim");
    for (const auto& row : sc_) {
        if (row.size() != dim_) {
            throw std::invalid_argument("structure constant table must be dim x dim");
        }
        for (const Vec& v : row) {
            if (!(v.field() == field_) || v.dim() != dim_) {
                throw std::invalid_argument("structure constant entry dimension mismatch");
            }
        }
    }
}

Vec KAlgebra::star(const Vec& u, const Vec& v) const {
    if (!(u.field() == field_) || !(v.field() == field_) || u.dim() != dim_ || v.dim() != dim_) {
        throw std::invalid_argument("star: operand dimension mismatch");
    }
    Vec acc = Vec::zero(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            acc = acc + sc_[i][j].scaled(u[i] * v[j]);
        }
    }
    return acc;
}

namespace {

KAlgebra from_sign_table(const std::vector<std::string>& names, const int* tgt, const int* sgn) {
    Field q = Field::rationals();
    std::size_t dim = names.size();
    std::vector<std::vector<Vec>> sc(dim, std::vector<Vec>(dim, Vec::zero(q, dim)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Scalar> c(dim, Scalar::zero(q));
            c[static_cast<std::size_t>(tgt[i * dim + j])] = Scalar::from_int(q, sgn[i * dim + j]);
            sc[i][j] = Vec(q, std::move(c));
        }
    }
    return KAlgebra(q, dim, names, std::move(sc));
}

}  // namespace

KAlgebra KAlgebra::quaternions() {
    static const int tgt[16] = {0, 1, 2, 3,   //
                                1, 0, 3, 2,   //
                                2, 3, 0, 1,   //
                                3, 2, 1, 0};
    static const int sgn[16] = {+1, +1, +1, +1,  //
                                +1, -1, +1, -1,  //
                                +1, -1, -1, +1,  //
                                +1, +1, -1, -1};
    return from_sign_table({"e1", "i", "j", "k"}, tgt, sgn);
}

KAlgebra KAlgebra::octonions() {
    static const int tgt[64] = {
        0, 1, 2, 3, 4, 5, 6, 7,  //
        1, 0, 3, 2, 5, 4, 7, 6,  //
        2, 3, 0, 1, 6, 7, 4, 5,  //
        3, 2, 1, 0, 7, 6, 5, 4,  //
        4, 5, 6, 7, 0, 1, 2, 3,  //
        5, 4, 7, 6, 1, 0, 3, 2,  //
        6, 7, 4, 5, 2, 3, 0, 1,  //
        7, 6, 5, 4, 3, 2, 1, 0};
    static const int sgn[64] = {
        +1, +1, +1, +1, +1, +1, +1, +1,  //
        +1, -1, +1, -1, +1, -1, -1, +1,  //
        +1, -1, -1, +1, +1, +1, -1, -1,  //
        +1, +1, -1, -1, +1, -1, +1, -1,  //
        +1, -1, -1, -1, -1, +1, +1, +1,  //
        +1, +1, -1, +1, -1, -1, -1, +1,  //
        +1, +1, +1, -1, -1, +1, -1, -1,  //
        +1, -1, +1, +1, -1, -1, +1, -1};
    return from_sign_table({"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}, tgt, sgn);
}

KAlgebra KAlgebra::random(const Field& f, std::size_t dim, std::uint64_t seed,
                          std::size_t dim_bound) {
    if (dim > dim_bound) throw std::domain_error("random algebra dimension bound exceeded");
    std::mt19937_64 gen(seed);
    std::vector<std::vector<Vec>> sc;
    sc.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Vec> row;
        row.reserve(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Scalar> c;
            c.reserve(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                if (f.finite()) {
                    c.push_back(Scalar::from_int(f, static_cast<long long>(gen() % f.modulus())));
                } else {
                    long long num = static_cast<long long>(gen() % 7) - 3;
                    long long den = 1 + static_cast<long long>(gen() % 2);
                    c.push_back(Scalar::fraction(f, num, den));
                }
            }
            row.emplace_back(f, std::move(c));
        }
        sc.push_back(std::move(row));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    return KAlgebra(f, dim, std::move(names), std::move(sc));
}

KAlgebra KAlgebra::zero_product(const Field& f, std::size_t dim) {
    std::vector<std::vector<Vec>> sc(dim, std::vector<Vec>(dim, Vec::zero(f, dim)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    return KAlgebra(f, dim, std::move(names), std::move(sc));
}

std::vector<Vec> rational_sample_grid(const KAlgebra& a, const CheckOptions& opts) {
    const Field& q = a.field();
    std::vector<Vec> grid;
    auto push_unique = [&](Vec v) {
        for (const Vec& g : grid) {
            if (g == v) return;
        }
        grid.push_back(std::move(v));
    };

    if (a.dim() == 4) {
        push_unique(Vec::from_ints(q, {2, 3, 4, 2}));
        push_unique(Vec::from_ints(q, {3, 8, 1, 4}));
    }
    if (a.dim() == 8) {
        push_unique(Vec::from_ints(q, {1, 2, 3, 5, 7, 8, 11, 12}));
    }
    for (std::size_t i = 0; i < a.dim(); ++i) push_unique(a.basis_vec(i));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            push_unique(a.basis_vec(i) + a.basis_vec(j));
        }
    }
    std::mt19937_64 gen(opts.seed);
    for (std::size_t s = 0; s < opts.grid_random_samples; ++s) {
        std::vector<Scalar> c;
        c.reserve(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) {
            long long num = static_cast<long long>(gen() % 7) - 3;
            long long den = 1 + static_cast<long long>(gen() % 2);
            c.push_back(Scalar::fraction(q, num, den));
        }
        push_unique(Vec(q, std::move(c)));
    }
    return grid;
}

namespace {

PseudoVerdict verdict_holds(std::vector<Scalar> scalars, std::string detail) {
    return {VerdictStatus::holds, {}, std::move(scalars), std::move(detail)};
}

PseudoVerdict verdict_fails(std::vector<Vec> witness, std::string detail) {
    return {VerdictStatus::fails, std::move(witness), {}, std::move(detail)};
}

PseudoVerdict verdict_unknown(std::string detail) {
    return {VerdictStatus::unknown, {}, {}, std::move(detail)};
}

bool proportional_exists(const Vec& x, const Vec& y) {
    return solve_proportional(x, y).has_value();
}

std::vector<Vec> candidate_vectors(const KAlgebra& a, const CheckOptions& opts, bool pairs) {
    if (a.field().finite()) {
        return all_vectors(a.field(), a.dim(),
                           pairs ? opts.max_space_pairs : opts.max_space_triples);
    }
    return rational_sample_grid(a, opts);
}

}  // namespace

PseudoVerdict check_pseudo_commutative(const KAlgebra& a, const CheckOptions& opts) {
    bool exhaustive = a.field().finite();
    if (!exhaustive) {
        bool symmetric = true;
        for (std::size_t i = 0; i < a.dim() && symmetric; ++i) {
            for (std::size_t j = i + 1; j < a.dim() && symmetric; ++j) {
                if (!(a.sc(i, j) == a.sc(j, i))) symmetric = false;
            }
        }
        if (symmetric) {
            return verdict_holds({Scalar::one(a.field())}, "structure constants are symmetric");
        }
    }
    std::vector<Vec> vs = candidate_vectors(a, opts, /*pairs=*/true);
    for (const Vec& u : vs) {
        for (const Vec& v : vs) {
            if (!proportional_exists(a.star(u, v), a.star(v, u))) {
                return verdict_fails({u, v}, "u*v is not proportional to v*u");
            }
        }
    }
    if (exhaustive) return verdict_holds({}, "exhaustive over all vector pairs");
    return verdict_unknown("no counterexample in the rational sample grid");
}

PseudoVerdict check_pseudo_associative(const KAlgebra& a, const CheckOptions& opts) {
    bool exhaustive = a.field().finite();
    if (!exhaustive) {
        bool basis_assoc = true;
        for (std::size_t i = 0; i < a.dim() && basis_assoc; ++i) {
            for (std::size_t j = 0; j < a.dim() && basis_assoc; ++j) {
                for (std::size_t k = 0; k < a.dim() && basis_assoc; ++k) {
                    Vec lhs = a.star(a.sc(i, j), a.basis_vec(k));
                    Vec rhs = a.star(a.basis_vec(i), a.sc(j, k));
                    if (!(lhs == rhs)) basis_assoc = false;
                }
            }
        }
        if (basis_assoc) {
            return verdict_holds({Scalar::one(a.field()), Scalar::one(a.field())},
                                 "the product is associative on basis triples");
        }
    }
    std::vector<Vec> vs = candidate_vectors(a, opts, /*pairs=*/false);
    for (const Vec& u : vs) {
        for (const Vec& v : vs) {
            for (const Vec& w : vs) {
                Vec left = a.star(a.star(u, v), w);
                Vec right = a.star(u, a.star(v, w));
                if (!proportional_exists(left, right) || !proportional_exists(right, left)) {
                    return verdict_fails({u, v, w},
                                         "the two associations are not mutually proportional");
                }
            }
        }
    }
    if (exhaustive) return verdict_holds({}, "exhaustive over all vector triples");
    return verdict_unknown("no counterexample in the rational sample grid");
}

namespace {

// The four proportionality clauses required of a unit candidate at u.
bool unit_clauses_hold(const KAlgebra& a, const Vec& c, const Vec& u) {
    Vec uc = a.star(u, c);
    Vec cu = a.star(c, u);
    return proportional_exists(u, uc) && proportional_exists(uc, u) &&
           proportional_exists(u, cu) && proportional_exists(cu, u);
}

}  // namespace

PseudoVerdict check_pseudo_unital(const KAlgebra& a, const std::optional<Vec>& candidate,
                                  const CheckOptions& opts) {
    if (a.field().finite()) {
        std::vector<Vec> all = all_vectors(a.field(), a.dim(), opts.max_space_pairs);
        std::vector<Vec> cands = candidate ? std::vector<Vec>{*candidate} : all;
        std::optional<std::pair<Vec, Vec>> first_failure;
        for (const Vec& c : cands) {
            bool ok = true;
            for (const Vec& u : all) {
                if (!unit_clauses_hold(a, c, u)) {
                    if (!first_failure) first_failure = {c, u};
                    ok = false;
                    break;
                }
            }
            if (ok) return verdict_holds({}, "unit candidate " + c.to_string());
        }
        return verdict_fails({first_failure->first, first_failure->second},
                             candidate ? "the supplied candidate is not a unit up to scalars"
                                       : "no vector acts as a unit up to scalars");
    }

    if (!candidate) {
        throw std::invalid_argument("a unit candidate must be supplied over the rationals");
    }
    if (a.dim() == 0) return verdict_holds({}, "trivial algebra");
    const Vec& c = *candidate;
    // Every vector is an eigenvector of u |-> u*c exactly when the map is a
    // scalar multiple of the identity, so the clause is decidable from the
    // basis images and the two-term basis sums below.
    auto uniform_eigenvalue = [&](bool right_action) -> std::optional<Scalar> {
        std::optional<Scalar> common;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec img = right_action ? a.star(a.basis_vec(i), c) : a.star(c, a.basis_vec(i));
            auto s = solve_proportional(img, a.basis_vec(i));
            if (!s) return std::nullopt;
            if (common && !(*common == *s)) return std::nullopt;
            common = *s;
        }
        return common;
    };
    auto beta = uniform_eigenvalue(true);
    auto delta = uniform_eigenvalue(false);
    if (beta && delta) {
        if (beta->is_zero() || delta->is_zero()) {
            return verdict_fails({c, a.basis_vec(0)}, "the candidate annihilates the algebra");
        }
        return verdict_holds({beta->inverse(), *beta, delta->inverse(), *delta},
                             "u*c = beta u and c*u = delta u identically");
    }
    // Not a scalar action: some basis vector or sum of two basis eigenvectors
    // with distinct eigenvalues refutes the clause.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!unit_clauses_hold(a, c, a.basis_vec(i))) {
            return verdict_fails({c, a.basis_vec(i)}, "basis vector is not scaled by the candidate");
        }
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i + 1; j < a.dim(); ++j) {
            Vec u = a.basis_vec(i) + a.basis_vec(j);
            if (!unit_clauses_hold(a, c, u)) {
                return verdict_fails({c, u}, "two-term sum is not scaled by the candidate");
            }
        }
    }
    return verdict_unknown("candidate acts diagonally on the sample set");
}

PseudoVerdict check_pseudo_contractive(const KAlgebra& a, const CheckOptions& opts) {
    bool exhaustive = a.field().finite();
    std::vector<Vec> vs = candidate_vectors(a, opts, /*pairs=*/true);
    for (const Vec& u : vs) {
        if (!proportional_exists(u, a.star(u, u))) {
            return verdict_fails({u}, "u is not proportional to u*u");
        }
    }
    if (exhaustive) return verdict_holds({}, "exhaustive over all vectors");
    return verdict_unknown("no counterexample in the rational sample grid");
}

PseudoVerdict check_pseudo_expansive(const KAlgebra& a, const CheckOptions& opts) {
    bool exhaustive = a.field().finite();
    if (!exhaustive) {
        bool all_zero = true;
        for (std::size_t i = 0; i < a.dim() && all_zero; ++i) {
            for (std::size_t j = 0; j < a.dim() && all_zero; ++j) {
                if (!a.sc(i, j).is_zero()) all_zero = false;
            }
        }
        if (all_zero) {
            return verdict_holds({Scalar::zero(a.field()), Scalar::zero(a.field())},
                                 "zero product: u*v = 0u + 0v");
        }
    }
    std::vector<Vec> vs = candidate_vectors(a, opts, /*pairs=*/true);
    for (const Vec& u : vs) {
        for (const Vec& v : vs) {
            Subspace plane = Subspace::span(a.field(), a.dim(), {u, v});
            if (!plane.contains(a.star(u, v))) {
                return verdict_fails({u, v}, "u*v lies outside span{u, v}");
            }
        }
    }
    if (exhaustive) return verdict_holds({}, "exhaustive over all vector pairs");
    return verdict_unknown("no counterexample in the rational sample grid");
}

PseudoVerdict check_pseudo_modal(const KAlgebra& a, const ModalRelation& r,
                                 ModalPseudoProperty which, const CheckOptions& opts) {
    if (!a.field().finite()) {
        throw std::domain_error("modal pseudo-properties are only checked over finite fields");
    }
    if (!(r.field() == a.field()) || r.dim() != a.dim()) {
        throw std::invalid_argument("relation does not live on the algebra's space");
    }
    detail::DenseSpace ds =
        detail::DenseSpace::build(a.field(), a.dim(), &a, opts.max_space_triples);
    const std::uint32_t size = static_cast<std::uint32_t>(ds.size);

    std::vector<char> rel(ds.size * ds.size);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel_pairs;
    for (std::uint32_t v = 0; v < size; ++v) {
        for (std::uint32_t z = 0; z < size; ++z) {
            bool rr = r.related(ds.vecs[v], ds.vecs[z]);
            rel[v * size + z] = rr;
            if (rr) rel_pairs.emplace_back(v, z);
        }
    }

    const bool right_assoc = which == ModalPseudoProperty::right_associative;
    for (const auto& [v, z] : rel_pairs) {
        for (std::uint32_t u = 0; u < size; ++u) {
            for (std::uint32_t w = 0; w < size; ++w) {
                std::uint32_t lhs = ds.star(ds.star(u, w), v);
                bool found = false;
                for (std::uint64_t beta = 0; beta < ds.p && !found; ++beta) {
                    std::uint32_t bz = ds.scale(beta, z);
                    for (std::uint32_t vp = 0; vp < size && !found; ++vp) {
                        if (!rel[vp * size + bz]) continue;
                        std::uint32_t rhs = right_assoc ? ds.star(u, ds.star(w, vp))
                                                        : ds.star(ds.star(u, vp), w);
                        if (ds.proportional(lhs, rhs)) found = true;
                    }
                }
                if (!found) {
                    return verdict_fails(
                        {ds.vecs[u], ds.vecs[w], ds.vecs[z], ds.vecs[v]},
                        std::string("no admissible scalars for the ") +
                            (right_assoc ? "right-associativity" : "left-commutativity") +
                            " clause");
                }
            }
        }
    }
    return verdict_holds({}, "exhaustive over all related quadruples");
}

}  // namespace lambekws
