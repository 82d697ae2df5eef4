// Exact-rational identity checks for the scattering construction: the
// transfer eigenrelation residual per matching and the one-walker seed
// relation, evaluated at random rational points.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oscpath/bethe_checks.hpp"
#include "oscpath/matchings.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/rational_eval.hpp"
#include "test_support.hpp"

using namespace oscpath;
using testsupport::rand_int;
using testsupport::small_rational;

namespace {

std::vector<Rational> random_point(int n) {
    std::vector<Rational> xs;
    for (int i = 0; i < n; ++i) xs.push_back(small_rational());
    return xs;
}

/// Heights carrying the coincidences of m: equal on every edge, otherwise
/// arbitrary integers in [-6, 6].
std::vector<int> compatible_heights(const Matching& m) {
    int n = m.vertex_count();
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = rand_int(-6, 6);
    for (int low : m.edge_lows()) y[static_cast<std::size_t>(low) + 1] = y[static_cast<std::size_t>(low)];
    return y;
}

}  // namespace

TEST_CASE("rational building blocks evaluate exactly") {
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(0), 5) == 0);
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), EvalError);

    CHECK(eval_lambda(Rational(2)) == Rational(5, 2));
    CHECK(eval_lambda(Rational(-1, 3)) == Rational(-10, 3));
    CHECK_THROWS_AS(eval_lambda(Rational(0)), EvalError);

    std::vector<Rational> xs = {Rational(2), Rational(1, 2)};
    CHECK(eval_capital_lambda(xs) == Rational(25, 4));
    std::vector<int> exps = {3, -1};
    CHECK(eval_monomial(xs, exps) == Rational(16));

    CHECK(integer_pow(Integer(3), 4) == 81);
}

TEST_CASE("the eigenrelation residual vanishes on compatible profiles") {
    for (int n : {2, 3}) {
        for (const Matching& m : all_matchings(n)) {
            int points_done = 0;
            int heights_done = 0;
            while (heights_done < 3) {
                std::vector<int> y = compatible_heights(m);
                points_done = 0;
                int attempts = 0;
                while (points_done < 5 && attempts < 200) {
                    ++attempts;
                    std::vector<Rational> xs = random_point(n);
                    Rational w = small_rational();
                    try {
                        Rational residual = lemma1_residual(n, m, y, xs, w);
                        INFO("n=" << n << " edges=" << m.edge_count());
                        CHECK(residual == 0);
                        ++points_done;
                    } catch (const EvalError&) {
                        // vanishing denominator: re-sample the point
                    }
                }
                REQUIRE(points_done == 5);
                ++heights_done;
            }
        }
    }
}

TEST_CASE("the eigenrelation residual detects incompatible profiles") {
    // An edge requires the two heights it joins to coincide; a profile
    // violating that is outside the relation's scope and the sum must not
    // collapse for generic points.
    Matching m(2, {0});
    std::vector<int> y = {0, 2};  // edge (0, 1) but unequal heights
    int nonzero = 0, trials = 0;
    while (trials < 20) {
        std::vector<Rational> xs = random_point(2);
        Rational w = small_rational();
        try {
            if (lemma1_residual(2, m, y, xs, w) != 0) ++nonzero;
            ++trials;
        } catch (const EvalError&) {
        }
    }
    CHECK(nonzero > 0);
}

TEST_CASE("the eigenrelation checks its arity") {
    Matching m(3, {0});
    std::vector<int> y = {0, 0, 2};
    std::vector<Rational> xs = random_point(2);  // one point too few
    CHECK_THROWS_AS(lemma1_residual(3, m, y, xs, small_rational()), ContractError);
    CHECK_THROWS_AS(lemma1_residual(2, m, std::vector<int>{0, 0}, random_point(2), Rational(1)),
                    ContractError);
}

TEST_CASE("the one-walker seed relation holds for any heights") {
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> y(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = rand_int(-5, 5);
            int t = rand_int(0, 4);
            std::vector<Rational> xs = random_point(n);
            CHECK(trial_solution_check(n, t, y, xs) == 0);
        }
}

TEST_CASE("series evaluation at a point matches the term sum") {
    Window w = Window::symmetric(2, 3);
    LaurentSeries s(2, w, 2);
    std::vector<int> e1 = {1, -2}, e2 = {0, 3};
    s.add_term(e1, OmegaPoly(3));
    s.add_term(e2, OmegaPoly(std::vector<Integer>{Integer(0), Integer(1)}));
    std::vector<Rational> xs = {Rational(2), Rational(1, 2)};
    Rational omega(5);
    // 3 * 2 * (1/2)^-2 + 5 * (1/2)^3
    CHECK(eval_series(s, xs, omega) == Rational(3 * 2 * 4) + Rational(5, 8));
}
