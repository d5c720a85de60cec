#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambekws/kalgebra.hpp"
#include "lambekws/relation.hpp"
#include "test_util.hpp"

using namespace lambekws;
using testutil::Rng;

namespace {

const Field f2 = Field::f2();
const Field q = Field::rationals();

// Independent transcriptions of the two product tables, kept separate from
// the library's encoding on purpose: (sign, target index) per basis pair.
struct Entry {
    int sign;
    int target;
};

// Hamilton table, rows are the left factor over {1, i, j, k}.
const Entry kQuatTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

const Entry kOctTable[8][8] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}, {1, 5}, {-1, 4}, {-1, 7}, {1, 6}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {1, 7}, {-1, 4}, {-1, 5}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}, {1, 7}, {-1, 6}, {1, 5}, {-1, 4}},
    {{1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 5}, {1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}},
    {{1, 6}, {1, 7}, {1, 4}, {-1, 5}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}},
    {{1, 7}, {-1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}},
};

/// Bilinear-expansion oracle over a (sign, target) table; independent of
/// KAlgebra::star.
template <std::size_t N>
Vec oracle_star(const Entry (&table)[N][N], const Vec& u, const Vec& v) {
    std::vector<Scalar> out(N, Scalar::zero(q));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const Entry& e = table[i][j];
            Scalar c = u[i] * v[j] * Scalar::from_int(q, e.sign);
            out[e.target] = out[e.target] + c;
        }
    }
    return Vec(q, std::move(out));
}

Vec qv(std::initializer_list<long long> c) { return Vec::from_ints(q, c); }

bool scalar_exists_for(const KAlgebra& a, const Vec& x, const Vec& y) {
    // Literal existential: some field element scales y to x.
    if (a.field().finite()) {
        for (std::uint64_t s = 0; s < a.field().modulus(); ++s) {
            if (x == y.scaled(Scalar::from_int(a.field(), static_cast<long long>(s)))) return true;
        }
        return false;
    }
    return solve_proportional(x, y).has_value();
}

}  // namespace

TEST_CASE("quaternion table matches the Hamilton product") {
    KAlgebra h = KAlgebra::quaternions();
    REQUIRE(h.dim() == 4);
    CHECK(h.field() == q);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Vec expected = oracle_star(kQuatTable, h.basis_vec(i), h.basis_vec(j));
            CHECK(h.sc(i, j) == expected);
        }
    }
    // Spot values: i*j = k, j*i = -k, unit on a sample.
    Vec i = h.basis_vec(1), j = h.basis_vec(2), k = h.basis_vec(3);
    CHECK(h.star(i, j) == k);
    CHECK(h.star(j, i) == -k);
    Vec u = qv({5, -2, 3, 7});
    CHECK(h.star(h.basis_vec(0), u) == u);
    CHECK(h.star(u, h.basis_vec(0)) == u);
}

TEST_CASE("quaternion witness products") {
    KAlgebra h = KAlgebra::quaternions();
    Vec u = qv({2, 3, 4, 2});
    Vec v = qv({3, 8, 1, 4});

    Vec uv = h.star(u, v);
    Vec vu = h.star(v, u);
    CHECK(uv == qv({-30, 39, 18, -15}));
    // The k coefficient of v*u is 43 by direct expansion of the table.
    CHECK(vu == qv({-30, 11, 10, 43}));
    CHECK(oracle_star(kQuatTable, u, v) == uv);
    CHECK(oracle_star(kQuatTable, v, u) == vu);
    CHECK_FALSE(solve_proportional(uv, vu).has_value());
}

TEST_CASE("octonion table and unit") {
    KAlgebra o = KAlgebra::octonions();
    REQUIRE(o.dim() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            Vec expected = oracle_star(kOctTable, o.basis_vec(i), o.basis_vec(j));
            CHECK(o.sc(i, j) == expected);
        }
    }
    Vec u = qv({1, -2, 3, 0, 5, 1, -1, 4});
    CHECK(o.star(o.basis_vec(0), u) == u);
    CHECK(o.star(u, o.basis_vec(0)) == u);
}

TEST_CASE("octonion squares associate (alternativity consequence)") {
    // For any u, (u*u)*u = u*(u*u); in particular a single repeated vector
    // can never separate the two associations.
    KAlgebra o = KAlgebra::octonions();
    Vec u = qv({1, 2, 3, 5, 7, 8, 11, 12});
    Vec uu = o.star(u, u);
    CHECK(uu == qv({-415, 4, 6, 10, 14, 16, 22, 24}));
    CHECK(oracle_star(kOctTable, u, u) == uu);
    CHECK(o.star(uu, u) == o.star(u, uu));

    Rng rng(7);
    for (int round = 0; round < 10; ++round) {
        Vec w = testutil::random_vector(rng, q, 8);
        CHECK(o.star(o.star(w, w), w) == o.star(w, o.star(w, w)));
    }
}

TEST_CASE("bilinearity and scalar compatibility") {
    Rng rng(99);
    KAlgebra h = KAlgebra::quaternions();
    KAlgebra r = KAlgebra::random(f2, 3, 5);
    for (int round = 0; round < 25; ++round) {
        for (const KAlgebra* a : {&h, &r}) {
            const Field& f = a->field();
            Vec u = testutil::random_vector(rng, f, a->dim());
            Vec u2 = testutil::random_vector(rng, f, a->dim());
            Vec v = testutil::random_vector(rng, f, a->dim());
            CHECK(a->star(u + u2, v) == a->star(u, v) + a->star(u2, v));
            CHECK(a->star(v, u + u2) == a->star(v, u) + a->star(v, u2));
            Scalar alpha = f.finite() ? Scalar::from_int(f, 1) : Scalar::fraction(q, 3, 2);
            Scalar beta = f.finite() ? Scalar::from_int(f, 1) : Scalar::from_int(q, -2);
            CHECK(a->star(u.scaled(alpha), v.scaled(beta)) ==
                  a->star(u, v).scaled(alpha * beta));
        }
    }
}

TEST_CASE("random algebras are seed stable") {
    KAlgebra a = KAlgebra::random(f2, 2, 42);
    KAlgebra b = KAlgebra::random(f2, 2, 42);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(a.sc(i, j) == b.sc(i, j));
    }
    KAlgebra c = KAlgebra::random(f2, 2, 43);
    bool some_difference = false;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!(a.sc(i, j) == c.sc(i, j))) some_difference = true;
        }
    }
    CHECK(some_difference);

    KAlgebra tiny = KAlgebra::random(f2, 1, 7);
    CHECK(tiny.dim() == 1);
    CHECK_THROWS_AS(KAlgebra::random(f2, 99, 0), std::domain_error);
}

TEST_CASE("pseudo-commutativity") {
    KAlgebra h = KAlgebra::quaternions();
    PseudoVerdict v = check_pseudo_commutative(h);
    CHECK(v.status == VerdictStatus::fails);
    REQUIRE(v.witness.size() == 2);
    CHECK(v.witness[0] == qv({2, 3, 4, 2}));
    CHECK(v.witness[1] == qv({3, 8, 1, 4}));
    // The witness re-checks: no admissible scalar either way around.
    CHECK_FALSE(scalar_exists_for(h, h.star(v.witness[0], v.witness[1]),
                                  h.star(v.witness[1], v.witness[0])));

    // A commutative algebra holds with a uniform scalar.
    KAlgebra sym = KAlgebra::zero_product(q, 2);
    PseudoVerdict vs = check_pseudo_commutative(sym);
    CHECK(vs.status == VerdictStatus::holds);
    REQUIRE(vs.scalars.size() == 1);
    CHECK(vs.scalars[0].is_one());

    // Exhaustive verdicts match a direct quantifier loop on small samples.
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        KAlgebra a = KAlgebra::random(f2, 2, seed);
        bool oracle = true;
        for (const Vec& u : all_vectors(f2, 2)) {
            for (const Vec& w : all_vectors(f2, 2)) {
                if (!scalar_exists_for(a, a.star(u, w), a.star(w, u))) oracle = false;
            }
        }
        PseudoVerdict got = check_pseudo_commutative(a);
        CHECK(got.status == (oracle ? VerdictStatus::holds : VerdictStatus::fails));
        if (got.status == VerdictStatus::fails) {
            REQUIRE(got.witness.size() == 2);
            CHECK_FALSE(scalar_exists_for(a, a.star(got.witness[0], got.witness[1]),
                                          a.star(got.witness[1], got.witness[0])));
        }
    }
}

TEST_CASE("pseudo-associativity") {
    KAlgebra o = KAlgebra::octonions();
    PseudoVerdict v = check_pseudo_associative(o);
    CHECK(v.status == VerdictStatus::fails);
    REQUIRE(v.witness.size() == 3);
    // Witness re-check: one of the two directions has no admissible scalar.
    Vec left = o.star(o.star(v.witness[0], v.witness[1]), v.witness[2]);
    Vec right = o.star(v.witness[0], o.star(v.witness[1], v.witness[2]));
    CHECK((!scalar_exists_for(o, left, right) || !scalar_exists_for(o, right, left)));

    KAlgebra h = KAlgebra::quaternions();
    PseudoVerdict vh = check_pseudo_associative(h);
    CHECK(vh.status == VerdictStatus::holds);  // associative on basis triples

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        KAlgebra a = KAlgebra::random(f2, 2, seed);
        bool oracle = true;
        for (const Vec& u : all_vectors(f2, 2)) {
            for (const Vec& w : all_vectors(f2, 2)) {
                for (const Vec& z : all_vectors(f2, 2)) {
                    Vec l = a.star(a.star(u, w), z);
                    Vec r = a.star(u, a.star(w, z));
                    if (!scalar_exists_for(a, l, r) || !scalar_exists_for(a, r, l)) oracle = false;
                }
            }
        }
        PseudoVerdict got = check_pseudo_associative(a);
        CHECK(got.status == (oracle ? VerdictStatus::holds : VerdictStatus::fails));
    }
}

TEST_CASE("pseudo-unitality") {
    KAlgebra h = KAlgebra::quaternions();
    PseudoVerdict v = check_pseudo_unital(h, h.basis_vec(0));
    CHECK(v.status == VerdictStatus::holds);
    REQUIRE(v.scalars.size() == 4);
    for (const Scalar& s : v.scalars) CHECK(s.is_one());

    KAlgebra o = KAlgebra::octonions();
    CHECK(check_pseudo_unital(o, o.basis_vec(0)).status == VerdictStatus::holds);
    // A scaled unit still works up to scalars.
    CHECK(check_pseudo_unital(h, h.basis_vec(0).scaled(Scalar::from_int(q, 2))).status ==
          VerdictStatus::holds);
    // i is not a unit candidate.
    CHECK(check_pseudo_unital(h, h.basis_vec(1)).status == VerdictStatus::fails);
    CHECK_THROWS_AS(check_pseudo_unital(h, std::nullopt), std::invalid_argument);

    // The zero-product algebra has no unit: u*c = 0 cannot scale back to u.
    KAlgebra z = KAlgebra::zero_product(f2, 2);
    PseudoVerdict vz = check_pseudo_unital(z, std::nullopt);
    CHECK(vz.status == VerdictStatus::fails);
    REQUIRE(vz.witness.size() == 2);

    // Finite-field candidate search agrees with a direct loop.
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        KAlgebra a = KAlgebra::random(f2, 2, seed);
        bool oracle = false;
        for (const Vec& c : all_vectors(f2, 2)) {
            bool all_u = true;
            for (const Vec& u : all_vectors(f2, 2)) {
                Vec uc = a.star(u, c), cu = a.star(c, u);
                if (!scalar_exists_for(a, u, uc) || !scalar_exists_for(a, uc, u) ||
                    !scalar_exists_for(a, u, cu) || !scalar_exists_for(a, cu, u)) {
                    all_u = false;
                    break;
                }
            }
            if (all_u) oracle = true;
        }
        CHECK((check_pseudo_unital(a, std::nullopt).status == VerdictStatus::holds) == oracle);
    }
}

TEST_CASE("pseudo-contractivity and pseudo-expansivity") {
    // Idempotent basis products over F2: u*u = u, so contraction holds.
    std::vector<std::vector<Vec>> sc(2, std::vector<Vec>(2, Vec::zero(f2, 2)));
    sc[0][0] = Vec::unit(f2, 2, 0);
    sc[1][1] = Vec::unit(f2, 2, 1);
    KAlgebra idem(f2, 2, {"e0", "e1"}, sc);
    CHECK(check_pseudo_contractive(idem).status == VerdictStatus::holds);

    KAlgebra z = KAlgebra::zero_product(f2, 2);
    CHECK(check_pseudo_contractive(z).status == VerdictStatus::fails);
    PseudoVerdict ez = check_pseudo_expansive(z);
    CHECK(ez.status == VerdictStatus::holds);

    KAlgebra zq = KAlgebra::zero_product(q, 3);
    CHECK(check_pseudo_expansive(zq).status == VerdictStatus::holds);

    KAlgebra h = KAlgebra::quaternions();
    PseudoVerdict eh = check_pseudo_expansive(h);
    CHECK(eh.status == VerdictStatus::fails);
    REQUIRE(eh.witness.size() == 2);
    CHECK_FALSE(Subspace::span(q, 4, {eh.witness[0], eh.witness[1]})
                    .contains(h.star(eh.witness[0], eh.witness[1])));
    // The classic instance: i*j = k escapes span{i, j} (rank of the 3x4
    // matrix (i; j; k) is 3).
    Vec i = h.basis_vec(1), j = h.basis_vec(2);
    CHECK(rref(q, 4, {i, j, h.star(i, j)}).rank == 3);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        KAlgebra a = KAlgebra::random(f2, 2, seed);
        bool contr = true, expa = true;
        for (const Vec& u : all_vectors(f2, 2)) {
            if (!scalar_exists_for(a, u, a.star(u, u))) contr = false;
            for (const Vec& w : all_vectors(f2, 2)) {
                if (!Subspace::span(f2, 2, {u, w}).contains(a.star(u, w))) expa = false;
            }
        }
        CHECK((check_pseudo_contractive(a).status == VerdictStatus::holds) == contr);
        CHECK((check_pseudo_expansive(a).status == VerdictStatus::holds) == expa);
    }
}

TEST_CASE("modal pseudo-properties") {
    // Commutative associative algebra with the identity relation: both hold.
    std::vector<std::vector<Vec>> sc(2, std::vector<Vec>(2, Vec::zero(f2, 2)));
    KAlgebra z(f2, 2, {"e0", "e1"}, sc);
    ModalRelation ident = ModalRelation::functional(LinearMap::identity(f2, 2));
    CHECK(check_pseudo_modal(z, ident, ModalPseudoProperty::right_associative).status ==
          VerdictStatus::holds);
    CHECK(check_pseudo_modal(z, ident, ModalPseudoProperty::left_commutative).status ==
          VerdictStatus::holds);

    // Relation with only the zero pair: vacuously both properties hold.
    ModalRelation empty_rel = ModalRelation::extensional(f2, 2, {});
    KAlgebra a0 = KAlgebra::random(f2, 2, 3);
    CHECK(check_pseudo_modal(a0, empty_rel, ModalPseudoProperty::right_associative).status ==
          VerdictStatus::holds);
    CHECK(check_pseudo_modal(a0, empty_rel, ModalPseudoProperty::left_commutative).status ==
          VerdictStatus::holds);

    // Random algebras with random functional relations match the direct
    // quantifier enumeration.
    Rng rng(5);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        KAlgebra a = KAlgebra::random(f2, 2, seed);
        std::vector<std::vector<Scalar>> rows(2, std::vector<Scalar>(2, Scalar::zero(f2)));
        for (auto& row : rows) {
            for (Scalar& s : row) s = Scalar::from_int(f2, static_cast<long long>(rng.below(2)));
        }
        ModalRelation rel = ModalRelation::functional(LinearMap(f2, rows));

        for (ModalPseudoProperty which :
             {ModalPseudoProperty::right_associative, ModalPseudoProperty::left_commutative}) {
            bool oracle = true;
            for (const Vec& v : all_vectors(f2, 2)) {
                for (const Vec& zz : all_vectors(f2, 2)) {
                    if (!rel.related(v, zz)) continue;
                    for (const Vec& u : all_vectors(f2, 2)) {
                        for (const Vec& w : all_vectors(f2, 2)) {
                            Vec lhs = a.star(a.star(u, w), v);
                            bool found = false;
                            for (long long beta = 0; beta < 2 && !found; ++beta) {
                                Vec bz = zz.scaled(Scalar::from_int(f2, beta));
                                for (const Vec& vp : all_vectors(f2, 2)) {
                                    if (!rel.related(vp, bz)) continue;
                                    Vec rhs = which == ModalPseudoProperty::right_associative
                                                  ? a.star(u, a.star(w, vp))
                                                  : a.star(a.star(u, vp), w);
                                    if (scalar_exists_for(a, lhs, rhs)) {
                                        found = true;
                                        break;
                                    }
                                }
                            }
                            if (!found) oracle = false;
                        }
                    }
                }
            }
            CHECK((check_pseudo_modal(a, rel, which).status == VerdictStatus::holds) == oracle);
        }
    }
}

TEST_CASE("rational sample grid contains the distinguished vectors") {
    KAlgebra h = KAlgebra::quaternions();
    auto grid = rational_sample_grid(h, {});
    REQUIRE(grid.size() >= 2);
    CHECK(grid[0] == qv({2, 3, 4, 2}));
    CHECK(grid[1] == qv({3, 8, 1, 4}));

    KAlgebra o = KAlgebra::octonions();
    auto grid8 = rational_sample_grid(o, {});
    CHECK(grid8[0] == qv({1, 2, 3, 5, 7, 8, 11, 12}));
}
