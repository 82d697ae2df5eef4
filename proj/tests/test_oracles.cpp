// Cross-checks between the independent counting oracles: transfer recursion
// (dp_run), exhaustive enumeration (brute_force), the determinant for the
// zero-contact slice, and frozen reference values.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oscpath/brute_force.hpp"
#include "oscpath/dp_solver.hpp"
#include "oscpath/lgv.hpp"
#include "oscpath/problem.hpp"
#include "reference_data.hpp"
#include "test_support.hpp"

using namespace oscpath;
using testsupport::rand_int;
using testsupport::random_heights;

TEST_CASE("transfer recursion reproduces the frozen family polynomials") {
    for (int n = 2; n <= 5; ++n)
        CHECK(dp_run(ProblemSpec::example(n)) == testdata::default_family_poly(n));
}

TEST_CASE("exhaustive enumeration agrees with the recursion on small instances") {
    CHECK(brute_force(ProblemSpec::example(2)) == testdata::default_family_poly(2));
    for (int trial = 0; trial < 30; ++trial) {
        int n = rand_int(1, 3);
        int t = rand_int(0, n == 3 ? 5 : 7);
        ProblemSpec spec(n, t, random_heights(n, 0, 8), random_heights(n, t & 1, 8));
        INFO("n=" << n << " t=" << t);
        CHECK(brute_force(spec) == dp_run(spec));
    }
}

TEST_CASE("single walker counts are plain binomials") {
    for (int t = 0; t <= 10; ++t)
        for (int d = -t; d <= t; d += 2) {
            ProblemSpec spec(1, t, {0}, {d});
            OmegaPoly r = dp_run(spec);
            REQUIRE(r.degree() <= 0);
            CHECK(r.coeff(0) == binomial(t, (t + d) / 2));
        }
}

TEST_CASE("zero steps leave walkers in place") {
    ProblemSpec stay(3, 0, {0, 2, 4}, {0, 2, 4});
    CHECK(dp_run(stay) == OmegaPoly(1));
    CHECK(brute_force(stay) == OmegaPoly(1));
    ProblemSpec move(3, 0, {0, 2, 4}, {0, 2, 6});
    CHECK(!move.reachable());
    CHECK(dp_run(move).is_zero());
    CHECK(brute_force(move).is_zero());
}

TEST_CASE("unreachable boundaries give the zero polynomial") {
    ProblemSpec far(2, 2, {0, 2}, {6, 8});
    CHECK(!far.reachable());
    CHECK(dp_run(far).is_zero());
    CHECK(brute_force(far).is_zero());
    CHECK(lgv_determinant(far) == 0);
}

TEST_CASE("zero-contact slice matches the crossing-free determinant") {
    // With no contacts allowed the ensemble is the vicious one, whose count
    // is the classical path-family determinant.
    for (int n = 2; n <= 4; ++n) {
        ProblemSpec spec = ProblemSpec::example(n);
        CHECK(dp_run(spec).coeff(0) == lgv_determinant(spec));
    }
    for (int trial = 0; trial < 25; ++trial) {
        int n = rand_int(1, 4);
        int t = rand_int(0, 8);
        ProblemSpec spec(n, t, random_heights(n, 0), random_heights(n, t & 1));
        INFO("n=" << n << " t=" << t);
        CHECK(dp_run(spec).coeff(0) == lgv_determinant(spec));
    }
}

TEST_CASE("determinant helper expands small matrices exactly") {
    CHECK(determinant({{Integer(3)}}) == 3);
    CHECK(determinant({{Integer(1), Integer(2)}, {Integer(3), Integer(4)}}) == -2);
    CHECK(determinant({{Integer(2), Integer(0), Integer(1)},
                       {Integer(1), Integer(1), Integer(0)},
                       {Integer(0), Integer(3), Integer(1)}}) == 5);
    // Bareiss stays exact on a singular integer matrix
    CHECK(determinant({{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}) == 0);
    CHECK(walk_count(4, 0, 0) == 6);
    CHECK(walk_count(4, 0, 2) == 4);
    CHECK(walk_count(3, 0, 2) == 0);  // parity mismatch
}

TEST_CASE("counting polynomials have nonnegative coefficients within the degree bound") {
    for (int trial = 0; trial < 30; ++trial) {
        int n = rand_int(1, 4);
        int t = rand_int(0, 6);
        ProblemSpec spec(n, t, random_heights(n, 0), random_heights(n, t & 1));
        OmegaPoly r = dp_run(spec);
        CHECK(r.degree() <= spec.omega_degree_bound());
        for (int k = 0; k <= r.degree(); ++k) CHECK(r.coeff(k) >= 0);
    }
}

TEST_CASE("oracles honour their time budget") {
    ProblemSpec spec = ProblemSpec::example(4);
    CHECK_THROWS_AS(dp_run(spec, Deadline::after_seconds(0.0)), BudgetError);
    ProblemSpec small(3, 6, {0, 2, 4}, {0, 2, 4});
    CHECK_THROWS_AS(brute_force(small, Deadline::after_seconds(0.0)), BudgetError);
    // a generous budget must not interfere with the result
    CHECK(dp_run(spec, Deadline::after_seconds(600.0)) == testdata::default_family_poly(4));
}

TEST_CASE("brute force refuses desk-scale blowups") {
    // 6 walkers across 40 steps is far beyond direct enumeration; the guard
    // must throw rather than hang.
    ProblemSpec spec(6, 40, {0, 2, 4, 6, 8, 10}, {0, 2, 4, 6, 8, 10});
    CHECK_THROWS_AS(brute_force(spec), BudgetError);
}
