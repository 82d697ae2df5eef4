#pragma once

#include <span>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/matchings.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/permutations.hpp"
#include "oscpath/rational_eval.hpp"

namespace oscpath {

namespace detail {

/// prod_a x_{sigma(a)}^{v_a}
inline Rational permuted_monomial(std::span<const Rational> xs, const Permutation& sigma,
                                  std::span<const int> v) {
    Rational r(1);
    for (int a = 0; a < sigma.size(); ++a)
        r *= rational_pow(xs[static_cast<std::size_t>(sigma(a))], v[static_cast<std::size_t>(a)]);
    r.canonicalize();
    return r;
}

/// Scattering amplitude with all signs +1, for the wavefunction written as
/// sum_sigma A_sigma x_sigma^y: one interaction factor per value pair that
/// sigma carries out of order, which is the inversion set of sigma^{-1}.
/// Pairing the factors over the inversion set of sigma itself instead makes
/// the eigenrelation fail from n = 3 on; the two conventions only coincide
/// at n = 2.
inline Rational amplitude(std::span<const Rational> xs, const Permutation& sigma,
                          const Rational& w) {
    Rational r(1);
    for (auto [a, b] : sigma.inverse().inversion_set())
        r *= eval_s_factor(xs[static_cast<std::size_t>(a)], xs[static_cast<std::size_t>(b)], w, 1, 1);
    r.canonicalize();
    return r;
}

}  // namespace detail

/// Residual of the transfer-matrix eigenrelation for one matching M at an
/// exact rational point:
///
///   sum_sigma A_sigma(x; w) * (Lambda_n - w^{edges(M)} * sum_{e in v^M} x_sigma^e)
///            * x_sigma^y
///
/// with x_sigma^v = prod_a x_{sigma(a)}^{v_a}.  The scattering form of
/// A_sigma makes this vanish whenever y carries the coincidences of M
/// (y_a = y_{a+1} for every edge; the other entries are arbitrary, ordering
/// included).  Those are exactly the profiles the transfer relation speaks
/// about; for incompatible y the sum has no reason to vanish and generally
/// does not.  Any nonzero value on a compatible profile is a bug in the
/// interaction factor or the step-set rules.  Vanishing denominators raise
/// EvalError, in which case the caller re-samples x.
inline Rational lemma1_residual(int n, const Matching& m, std::span<const int> y,
                                std::span<const Rational> xs, const Rational& w) {
    detail::require(m.vertex_count() == n, "matching size differs from walker count");
    detail::require(static_cast<int>(y.size()) == n, "height list length differs from walker count");
    detail::require(static_cast<int>(xs.size()) == n, "point list length differs from walker count");

    const Rational lambda_all = eval_capital_lambda(xs);
    const Rational w_edges = rational_pow(w, m.edge_count());
    const auto steps = step_sets(m);

    Rational total(0);
    for_each_permutation(n, [&](const Permutation& sigma) {
        Rational esum(0);
        std::vector<int> e(static_cast<std::size_t>(n));
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        for (;;) {
            for (int i = 0; i < n; ++i)
                e[static_cast<std::size_t>(i)] =
                    steps[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            esum += detail::permuted_monomial(xs, sigma, e);
            int i = 0;
            while (i < n &&
                   ++pick[static_cast<std::size_t>(i)] >= steps[static_cast<std::size_t>(i)].size()) {
                pick[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
        }
        Rational bracket = lambda_all - w_edges * esum;
        total += detail::amplitude(xs, sigma, w) * bracket * detail::permuted_monomial(xs, sigma, y);
    });
    total.canonicalize();
    return total;
}

/// Residual of the one-walker seed relation the whole construction rests on:
///
///   Lambda^{t+1} x^y - Lambda^t * sum_{e in {+1,-1}^n} x^{y+e}
///
/// which vanishes for every y because sum_e x^e = Lambda.  Exercises the
/// rational plumbing end to end.
inline Rational trial_solution_check(int n, int t, std::span<const int> y,
                                     std::span<const Rational> xs) {
    detail::require(static_cast<int>(y.size()) == n, "height list length differs from walker count");
    detail::require(static_cast<int>(xs.size()) == n, "point list length differs from walker count");
    const Rational lambda_all = eval_capital_lambda(xs);
    Rational esum(0);
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> ye(y.begin(), y.end());
        for (int i = 0; i < n; ++i) ye[static_cast<std::size_t>(i)] += (mask >> i) & 1 ? 1 : -1;
        esum += eval_monomial(xs, ye);
    }
    Rational r = rational_pow(lambda_all, t + 1) * eval_monomial(xs, y) -
                 rational_pow(lambda_all, t) * esum;
    r.canonicalize();
    return r;
}

}  // namespace oscpath
