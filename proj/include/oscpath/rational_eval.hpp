#pragma once

#include <span>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/laurent.hpp"
#include "oscpath/numbers.hpp"

namespace oscpath {

/// lambda(x) = x + 1/x at a nonzero rational point.
inline Rational eval_lambda(const Rational& x) {
    if (x == 0) throw EvalError("lambda undefined at x = 0");
    Rational r = x + rational_pow(x, -1);
    r.canonicalize();
    return r;
}

/// Lambda_n = prod_a lambda(x_a).
inline Rational eval_capital_lambda(std::span<const Rational> xs) {
    Rational r(1);
    for (const Rational& x : xs) r *= eval_lambda(x);
    r.canonicalize();
    return r;
}

/// prod_a x_a^{e_a}
inline Rational eval_monomial(std::span<const Rational> xs, std::span<const int> exps) {
    detail::require(xs.size() == exps.size(), "eval_monomial: arity mismatch");
    Rational r(1);
    for (std::size_t i = 0; i < xs.size(); ++i) r *= rational_pow(xs[i], exps[i]);
    r.canonicalize();
    return r;
}

/// The two-walker interaction factor
///
///   s = - (lambda_a lambda_b - w * x_b^{chi_b} / x_a^{chi_a})
///       / (lambda_a lambda_b - w * x_a^{chi_a} / x_b^{chi_b})
///
/// evaluated directly from that expression.  A vanishing denominator is an
/// EvalError; the caller re-samples the point.
inline Rational eval_s_factor(const Rational& xa, const Rational& xb, const Rational& w,
                              int chi_a, int chi_b) {
    detail::require(chi_a == 1 || chi_a == -1, "chi_a must be +1 or -1");
    detail::require(chi_b == 1 || chi_b == -1, "chi_b must be +1 or -1");
    Rational ll = eval_lambda(xa) * eval_lambda(xb);
    Rational a_pow = rational_pow(xa, chi_a);
    Rational b_pow = rational_pow(xb, chi_b);
    Rational den = ll - w * a_pow / b_pow;
    den.canonicalize();
    if (den == 0) throw EvalError("s factor: vanishing denominator");
    Rational num = ll - w * b_pow / a_pow;
    Rational r = -num / den;
    r.canonicalize();
    return r;
}

/// The same factor assembled along a different route: numerator and
/// denominator built from a single cross ratio A = x_a^{chi_a} / x_b^{chi_b}
/// and its inverse.  Used to cross-check eval_s_factor.
inline Rational eval_s_factor_cross(const Rational& xa, const Rational& xb, const Rational& w,
                                    int chi_a, int chi_b) {
    detail::require(chi_a == 1 || chi_a == -1, "chi_a must be +1 or -1");
    detail::require(chi_b == 1 || chi_b == -1, "chi_b must be +1 or -1");
    Rational ll = eval_lambda(xa) * eval_lambda(xb);
    Rational cross = rational_pow(xa, chi_a) / rational_pow(xb, chi_b);
    cross.canonicalize();
    if (cross == 0) throw EvalError("s factor: degenerate cross ratio");
    Rational den = ll - w * cross;
    den.canonicalize();
    if (den == 0) throw EvalError("s factor: vanishing denominator");
    Rational num = ll - w * rational_pow(cross, -1);
    Rational r = -(num / den);
    r.canonicalize();
    return r;
}

/// Value of a truncated series at rational points: sum over retained terms
/// of coeff(w) * x^exps.
inline Rational eval_series(const LaurentSeries& s, std::span<const Rational> xs, const Rational& w) {
    detail::require(static_cast<int>(xs.size()) == s.vars(), "eval_series: arity mismatch");
    Rational total(0);
    s.for_each_term([&](const PackedExp& k, const OmegaPoly& p) {
        Rational m(1);
        for (int i = 0; i < s.vars(); ++i) m *= rational_pow(xs[static_cast<std::size_t>(i)], k.lane(i));
        total += p.eval(w) * m;
    });
    total.canonicalize();
    return total;
}

}  // namespace oscpath
