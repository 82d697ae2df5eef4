// Ring and series algebra: contact-graded polynomials, packed exponents,
// windowed Laurent series, and the constant-term functional.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "oscpath/laurent.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/omega_poly.hpp"
#include "test_support.hpp"

using namespace oscpath;
using testsupport::rand_int;
using testsupport::random_poly;
using testsupport::small_rational;

TEST_CASE("contact polynomials form a commutative ring") {
    for (int iter = 0; iter < 60; ++iter) {
        OmegaPoly a = random_poly(6), b = random_poly(6), c = random_poly(6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + OmegaPoly() == a);
        CHECK(a * OmegaPoly(1) == a);
        CHECK(a + (-a) == OmegaPoly());
    }
}

TEST_CASE("capped multiplication matches full multiplication then truncation") {
    for (int iter = 0; iter < 60; ++iter) {
        OmegaPoly a = random_poly(8), b = random_poly(8);
        int cap = rand_int(0, 10);
        CHECK(mul_capped(a, b, cap) == (a * b).truncated(cap));
        // addmul drops product grades above the cap but keeps the accumulator
        OmegaPoly acc = random_poly(4);
        OmegaPoly got = acc;
        got.addmul_capped(a, b, cap);
        CHECK(got == acc + mul_capped(a, b, cap));
    }
}

TEST_CASE("degree and coefficient observers ignore trailing zeros") {
    OmegaPoly p(std::vector<Integer>{Integer(3), Integer(0), Integer(5), Integer(0)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 5);
    CHECK(p.coeff(17) == 0);
    CHECK(p == OmegaPoly(std::vector<Integer>{Integer(3), Integer(0), Integer(5)}));
    CHECK(OmegaPoly().degree() == -1);
    CHECK(OmegaPoly().is_zero());
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
    for (int iter = 0; iter < 40; ++iter) {
        OmegaPoly a = random_poly(6), b = random_poly(6);
        Rational w = small_rational(true);
        CHECK((a + b).eval(w) == a.eval(w) + b.eval(w));
        CHECK((a * b).eval(w) == a.eval(w) * b.eval(w));
    }
    OmegaPoly r4(std::vector<Integer>{Integer(20), Integer(8), Integer(1)});
    CHECK(r4.eval(Rational(1)) == 29);
    CHECK(r4.eval(Rational(0)) == 20);
    CHECK(r4.eval(Rational(-1, 2)) == Rational(65, 4));
}

TEST_CASE("packed exponents round-trip and add per lane") {
    for (int iter = 0; iter < 50; ++iter) {
        int vars = rand_int(1, kMaxVars);
        std::vector<int> a(static_cast<std::size_t>(vars)), b(static_cast<std::size_t>(vars));
        for (int i = 0; i < vars; ++i) {
            a[static_cast<std::size_t>(i)] = rand_int(-200, 200);
            b[static_cast<std::size_t>(i)] = rand_int(-200, 200);
        }
        PackedExp pa = pack_exponents(a), pb = pack_exponents(b);
        CHECK(unpack_exponents(pa, vars) == a);
        PackedExp sum = pa.plus(pb);
        for (int i = 0; i < vars; ++i)
            CHECK(sum.lane(i) == a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
    }
}

namespace {

/// Dense one-variable reference: exponent -> coefficient polynomial, with
/// window clipping and contact-cap truncation applied on every write.
using DenseSeries = std::map<int, OmegaPoly>;

DenseSeries naive_mul(const DenseSeries& a, const DenseSeries& b, int window, int cap) {
    DenseSeries out;
    for (const auto& [ea, pa] : a)
        for (const auto& [eb, pb] : b) {
            int e = ea + eb;
            if (e < -window || e > window) continue;
            out[e] += mul_capped(pa, pb, cap);
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

LaurentSeries to_series(const DenseSeries& d, int window, int cap) {
    LaurentSeries s(1, Window::symmetric(1, window), cap);
    for (const auto& [e, p] : d) {
        int exps[1] = {e};
        s.add_term(exps, p);
    }
    return s;
}

DenseSeries random_dense(int window, int max_terms) {
    DenseSeries d;
    int terms = rand_int(1, max_terms);
    for (int i = 0; i < terms; ++i) d[rand_int(-window, window)] += random_poly(3);
    for (auto it = d.begin(); it != d.end();)
        it = it->second.is_zero() ? d.erase(it) : std::next(it);
    return d;
}

}  // namespace

TEST_CASE("windowed series multiplication matches the dense reference") {
    for (int iter = 0; iter < 40; ++iter) {
        int window = rand_int(4, 10);
        int cap = rand_int(1, 6);
        DenseSeries da = random_dense(window, 6), db = random_dense(window, 6);
        LaurentSeries sa = to_series(da, window, cap), sb = to_series(db, window, cap);
        LaurentSeries prod = sa * sb;
        DenseSeries expect = naive_mul(da, db, window, cap);
        LaurentSeries expect_series = to_series(expect, window, cap);
        CHECK(prod == expect_series);
    }
}

TEST_CASE("constant term is linear") {
    for (int iter = 0; iter < 40; ++iter) {
        int window = rand_int(3, 8);
        int cap = 4;
        DenseSeries da = random_dense(window, 5), db = random_dense(window, 5);
        LaurentSeries sa = to_series(da, window, cap), sb = to_series(db, window, cap);
        OmegaPoly alpha = random_poly(2), beta = random_poly(2);
        LaurentSeries combo = sa.scaled(alpha);
        combo += sb.scaled(beta);
        CHECK(constant_term(combo) ==
              mul_capped(alpha, constant_term(sa), cap) + mul_capped(beta, constant_term(sb), cap));
    }
}

TEST_CASE("constant term is invariant under exponent inversion") {
    for (int iter = 0; iter < 40; ++iter) {
        int window = rand_int(3, 8);
        DenseSeries d = random_dense(window, 6);
        DenseSeries inv;
        for (const auto& [e, p] : d) inv[-e] = p;
        CHECK(constant_term(to_series(d, window, 4)) == constant_term(to_series(inv, window, 4)));
    }
}

TEST_CASE("walker weight series multiply to one inside the window") {
    // (x + 1/x) * (x - x^3 + ... +- x^K) telescopes to 1 -+ x^(K+1) where K
    // is the last odd exponent kept.  With an odd window the leftover falls
    // outside and the product is exactly the constant series 1.
    {
        Window w = Window::symmetric(1, 11);
        LaurentSeries prod = lambda_series(1, 0, w, 0) * inv_lambda_series(1, 0, w, 0);
        CHECK(prod == LaurentSeries::constant(1, w, 0, OmegaPoly(1)));
    }
    {
        // window 10 keeps +x^9 as the last term, so the leftover is +x^10
        Window w = Window::symmetric(1, 10);
        LaurentSeries prod = lambda_series(1, 0, w, 0) * inv_lambda_series(1, 0, w, 0);
        int exps[1] = {0};
        CHECK(prod.term(exps).coeff(0) == 1);
        exps[0] = 10;
        CHECK(prod.term(exps).coeff(0) == 1);
        for (int e = -10; e < 10; ++e) {
            if (e == 0) continue;
            exps[0] = e;
            CHECK(prod.term(exps).is_zero());
        }
    }
}

TEST_CASE("powers of the full walker weight reproduce central binomials") {
    // CT[(x + 1/x)^t] = C(t, t/2) per variable, and the power factorizes.
    for (int vars = 1; vars <= 3; ++vars) {
        for (int t : {0, 2, 4, 6}) {
            Window w = Window::symmetric(vars, t + 1);
            OmegaPoly ct = constant_term(lambda_power(vars, t, w, 0));
            Integer expect = 1;
            for (int i = 0; i < vars; ++i) expect *= binomial(t, t / 2);
            REQUIRE(ct.degree() <= 0);
            CHECK(ct.coeff(0) == expect);
        }
    }
}

TEST_CASE("series windows reject out-of-range construction") {
    CHECK_THROWS_AS(Window::symmetric(1, kMaxWindowBound + 1), ContractError);
    Window w = Window::symmetric(2, 4);
    Window narrower = Window::symmetric(2, 2);
    LaurentSeries s = LaurentSeries::constant(2, w, 3, OmegaPoly(7));
    LaurentSeries r = s.restricted(narrower);
    int exps[2] = {0, 0};
    CHECK(r.term(exps).coeff(0) == 7);
}
