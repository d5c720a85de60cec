#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lambekws/linalg.hpp"
#include "test_util.hpp"

using namespace lambekws;
using testutil::Rng;

namespace {

const Field f2 = Field::f2();
const Field f3 = Field::fp(3);
const Field q = Field::rationals();

Vec v2(std::initializer_list<long long> c) { return Vec::from_ints(f2, c); }

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
    CHECK(Scalar::from_int(f3, 2) + Scalar::from_int(f3, 2) == Scalar::from_int(f3, 1));
    CHECK(Scalar::from_int(f3, 2).inverse() == Scalar::from_int(f3, 2));
    CHECK(Scalar::fraction(q, 1, 3) + Scalar::fraction(q, 1, 6) == Scalar::fraction(q, 1, 2));
    CHECK(Scalar::fraction(q, 2, 4) == Scalar::fraction(q, 1, 2));
    CHECK_THROWS_AS(Field::fp(4), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
}

TEST_CASE("rref canonicalizes row spans") {
    auto r = rref(f2, 2, {v2({1, 1}), v2({0, 1})});
    CHECK(r.rank == 2);
    REQUIRE(r.basis.size() == 2);
    CHECK(r.basis[0] == v2({1, 0}));
    CHECK(r.basis[1] == v2({0, 1}));

    auto empty = rref(f2, 3, {});
    CHECK(empty.rank == 0);
    CHECK(empty.basis.empty());

    auto scaled = rref(q, 2, {Vec::from_ints(q, {2, 4})});
    CHECK(scaled.rank == 1);
    CHECK(scaled.basis[0] == Vec::from_ints(q, {1, 2}));

    CHECK_THROWS_AS(rref(f2, 2, {Vec::from_ints(f3, {1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(rref(f2, 2, {Vec::from_ints(f2, {1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("span basics") {
    CHECK(Subspace::span(f2, 3, {}) == Subspace::zero(f2, 3));

    // One-dimensional spans contain every scalar multiple.
    Vec v = Vec::from_ints(f3, {1, 2});
    Subspace line = Subspace::line(v);
    for (long long a = 0; a < 3; ++a) {
        CHECK(line.contains(v.scaled(Scalar::from_int(f3, a))));
    }

    // Two independent vectors in the F2 plane span all 4 elements.
    Subspace plane = Subspace::span(f2, 2, {v2({1, 0}), v2({1, 1})});
    CHECK(plane.rank() == 2);
    CHECK(plane.elements().size() == 4);
    auto all = testutil::span_elements_by_enumeration(f2, 2, {v2({1, 0}), v2({1, 1})});
    CHECK(all.size() == 4);
}

TEST_CASE("span is a closure operator") {
    for (const Field& f : {f2, f3}) {
        Rng rng(11);
        for (int round = 0; round < 50; ++round) {
            std::size_t dim = 1 + rng.below(4);
            auto xs = testutil::random_vectors(rng, f, dim, rng.below(4));
            auto ys = testutil::random_vectors(rng, f, dim, rng.below(4));
            Subspace sx = Subspace::span(f, dim, xs);

            // extensive
            for (const Vec& x : xs) CHECK(sx.contains(x));
            // idempotent
            CHECK(Subspace::span(f, dim, sx.basis()) == sx);
            // monotone: span(xs) included in span(xs ++ ys)
            auto both = xs;
            both.insert(both.end(), ys.begin(), ys.end());
            CHECK(Subspace::span(f, dim, both).contains(sx));
        }
    }
}

TEST_CASE("canonical form is order independent") {
    Rng rng(23);
    for (int round = 0; round < 40; ++round) {
        std::size_t dim = 1 + rng.below(4);
        auto xs = testutil::random_vectors(rng, f2, dim, 1 + rng.below(4));
        Subspace s1 = Subspace::span(f2, dim, xs);
        std::reverse(xs.begin(), xs.end());
        Subspace s2 = Subspace::span(f2, dim, xs);
        CHECK(s1 == s2);
        CHECK(s1.key() == s2.key());
    }
}

TEST_CASE("membership") {
    Subspace s = Subspace::span(f2, 2, {v2({1, 0}), v2({0, 1})});
    CHECK(s.contains(Vec::zero(f2, 2)));
    CHECK(s.contains(v2({1, 1})));

    Subspace line = Subspace::span(f2, 3, {Vec::from_ints(f2, {1, 0, 0})});
    CHECK_FALSE(line.contains(Vec::from_ints(f2, {1, 1, 0})));
    CHECK(line.elements().size() == 2);

    CHECK_THROWS_AS(line.contains(v2({1, 1})), std::invalid_argument);
}

TEST_CASE("intersection and join") {
    Subspace s = Subspace::span(f2, 2, {v2({1, 0})});
    CHECK(s.intersect(s) == s);
    CHECK(s.join(Subspace::zero(f2, 2)) == s);
    CHECK(s.join(s) == s);

    Subspace t = Subspace::span(f2, 2, {v2({0, 1})});
    CHECK(s.intersect(t) == Subspace::zero(f2, 2));
    CHECK(s.join(t) == Subspace::full(f2, 2));

    Subspace a = Subspace::span(f2, 3, {Vec::from_ints(f2, {1, 0, 0}), Vec::from_ints(f2, {0, 1, 0})});
    Subspace b = Subspace::span(f2, 3, {Vec::from_ints(f2, {0, 1, 0}), Vec::from_ints(f2, {0, 0, 1})});
    CHECK(a.intersect(b) == Subspace::span(f2, 3, {Vec::from_ints(f2, {0, 1, 0})}));
}

TEST_CASE("lattice laws and agreement with element-wise oracles") {
    Rng rng(37);
    for (int round = 0; round < 60; ++round) {
        std::size_t dim = 1 + rng.below(3);
        Subspace s = testutil::random_subspace(rng, f2, dim);
        Subspace t = testutil::random_subspace(rng, f2, dim);

        // absorption and idempotence
        CHECK(s.join(s.intersect(t)) == s);
        CHECK(s.intersect(s.join(t)) == s);
        CHECK(s.join(s) == s);
        CHECK(s.intersect(s) == s);

        // intersection oracle: common elements
        std::vector<Vec> common;
        for (const Vec& x : s.elements()) {
            if (t.contains(x)) common.push_back(x);
        }
        CHECK(s.intersect(t) == Subspace::span(f2, dim, common));

        // join oracle: closure of the union
        std::vector<Vec> both = s.basis();
        both.insert(both.end(), t.basis().begin(), t.basis().end());
        auto closure = testutil::span_elements_by_enumeration(f2, dim, both);
        Subspace joined = s.join(t);
        CHECK(joined.elements().size() == closure.size());
        for (const Vec& x : closure) CHECK(joined.contains(x));
    }
}

TEST_CASE("proportionality convention at zero") {
    Vec zero = Vec::zero(q, 2);
    CHECK(solve_proportional(zero, zero).has_value());
    CHECK_FALSE(solve_proportional(Vec::from_ints(q, {1, 0}), zero).has_value());
    auto a = solve_proportional(Vec::from_ints(q, {2, 4}), Vec::from_ints(q, {1, 2}));
    REQUIRE(a.has_value());
    CHECK(*a == Scalar::from_int(q, 2));
    CHECK_FALSE(solve_proportional(Vec::from_ints(q, {2, 4}), Vec::from_ints(q, {1, 3})).has_value());
}

TEST_CASE("membership constraint solving") {
    // No constraints: the full space.
    CHECK(solve_membership_constraints(f2, 3, {}) == Subspace::full(f2, 3));

    // Identity map constraint: the subspace itself.
    Rng rng(101);
    for (int round = 0; round < 20; ++round) {
        Subspace s = testutil::random_subspace(rng, f2, 3);
        Subspace got =
            solve_membership_constraints(f2, 3, {{LinearMap::identity(f2, 3), s}});
        CHECK(got == s);
    }

    // Random constraints against the per-vector filtering oracle.
    for (int round = 0; round < 30; ++round) {
        std::size_t dim = 1 + rng.below(4);
        std::vector<std::pair<LinearMap, Subspace>> constraints;
        std::size_t n_constraints = 1 + rng.below(2);
        for (std::size_t c = 0; c < n_constraints; ++c) {
            std::vector<std::vector<Scalar>> rows;
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<Scalar> row;
                for (std::size_t j = 0; j < dim; ++j) {
                    row.push_back(Scalar::from_int(f2, static_cast<long long>(rng.below(2))));
                }
                rows.push_back(std::move(row));
            }
            constraints.emplace_back(LinearMap(f2, std::move(rows)),
                                     testutil::random_subspace(rng, f2, dim));
        }
        Subspace got = solve_membership_constraints(f2, dim, constraints);

        std::vector<Vec> expected;
        for (const Vec& u : all_vectors(f2, dim)) {
            bool ok = true;
            for (const auto& [m, s] : constraints) {
                if (!s.contains(m.apply(u))) {
                    ok = false;
                    break;
                }
            }
            if (ok) expected.push_back(u);
        }
        // The filtered set is exactly the subspace.
        CHECK(got.elements().size() == expected.size());
        for (const Vec& u : expected) CHECK(got.contains(u));
    }
}

TEST_CASE("subspace enumeration") {
    CHECK(all_subspaces(f2, 1).size() == 2);
    CHECK(all_subspaces(f2, 2).size() == 5);   // 1 + 3 + 1
    CHECK(all_subspaces(f2, 3).size() == 16);  // 1 + 7 + 7 + 1
    CHECK(all_subspaces(f3, 2).size() == 6);   // 1 + 4 + 1

    // Exactly once, and in canonical form.
    std::set<std::string> keys;
    for (const Subspace& s : all_subspaces(f2, 3)) {
        CHECK(keys.insert(s.key()).second);
        CHECK(Subspace::span(f2, 3, s.basis()) == s);
    }

    CHECK_THROWS_AS(all_subspaces(q, 2), std::domain_error);
    CHECK_THROWS_AS(all_subspaces(f2, 9), std::domain_error);

    SubspaceEnumerator e(f2, 0);
    CHECK(e.next().has_value());  // the zero space
    CHECK_FALSE(e.next().has_value());
}

TEST_CASE("vector packing round-trips") {
    for (const Field& f : {f2, f3}) {
        for (std::size_t dim = 0; dim <= 3; ++dim) {
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < dim; ++i) count *= f.modulus();
            for (std::uint64_t i = 0; i < count; ++i) {
                CHECK(pack_vector(unpack_vector(f, dim, i)) == i);
            }
        }
    }
}
