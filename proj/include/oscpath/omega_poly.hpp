#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/numbers.hpp"

namespace oscpath {

/// Polynomial in the osculation-counting variable omega with exact integer
/// coefficients.  This is the coefficient ring of the whole project: every
/// counting routine returns one, and the Laurent-series machinery uses it as
/// the scalar type.
///
/// Storage is dense.  The coefficient vector may carry trailing zeros while a
/// value is used as an accumulation target; all observers skip them, so they
/// never affect degree(), equality or formatting.
class OmegaPoly {
public:
    OmegaPoly() = default;

    OmegaPoly(long constant) {
        if (constant != 0) c_.emplace_back(constant);
    }

    OmegaPoly(Integer constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }

    explicit OmegaPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {}

    /// coeff * omega^deg
    static OmegaPoly monomial(Integer coeff, int deg) {
        detail::require(deg >= 0, "monomial degree must be nonnegative");
        OmegaPoly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(deg) + 1, Integer(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    /// Degree of the polynomial, -1 for the zero polynomial.
    int degree() const {
        for (std::size_t i = c_.size(); i > 0; --i)
            if (c_[i - 1] != 0) return static_cast<int>(i - 1);
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    /// Coefficient of omega^k, zero outside the stored range.
    const Integer& coeff(int k) const {
        static const Integer kZero(0);
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return kZero;
        return c_[static_cast<std::size_t>(k)];
    }

    /// Trimmed copy of the coefficient vector (empty for zero).
    std::vector<Integer> coefficients() const {
        std::vector<Integer> out(c_.begin(), c_.begin() + (degree() + 1));
        return out;
    }

    OmegaPoly& operator+=(const OmegaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    OmegaPoly& operator-=(const OmegaPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }

    OmegaPoly operator-() const {
        OmegaPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    OmegaPoly& operator*=(const Integer& s) {
        if (s == 0) {
            c_.clear();
        } else {
            for (auto& c : c_) c *= s;
        }
        return *this;
    }

    friend OmegaPoly operator*(OmegaPoly a, const Integer& s) { return a *= s; }
    friend OmegaPoly operator*(const Integer& s, OmegaPoly a) { return a *= s; }

    /// Exact product.
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
        int da = a.degree(), db = b.degree();
        if (da < 0 || db < 0) return OmegaPoly();
        OmegaPoly r;
        r.c_.assign(static_cast<std::size_t>(da + db) + 1, Integer(0));
        r.addmul_capped(a, b, da + db);
        return r;
    }

    /// Product truncated to degree <= cap (cap >= 0).
    friend OmegaPoly mul_capped(const OmegaPoly& a, const OmegaPoly& b, int cap) {
        detail::require(cap >= 0, "mul_capped: cap must be nonnegative");
        OmegaPoly r;
        r.addmul_capped(a, b, cap);
        return r;
    }

    /// this += (a * b) truncated to degree <= cap.  Accumulation primitive of
    /// the series product kernel; may leave trailing zeros behind.
    void addmul_capped(const OmegaPoly& a, const OmegaPoly& b, int cap) {
        int da = a.degree(), db = b.degree();
        if (da < 0 || db < 0 || cap < 0) return;
        int top = std::min(da + db, cap);
        if (static_cast<int>(c_.size()) <= top) c_.resize(static_cast<std::size_t>(top) + 1, Integer(0));
        for (int i = 0; i <= std::min(da, cap); ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
            int jmax = std::min(db, cap - i);
            for (int j = 0; j <= jmax; ++j) {
                mpz_addmul(c_[static_cast<std::size_t>(i + j)].get_mpz_t(),
                           a.c_[static_cast<std::size_t>(i)].get_mpz_t(),
                           b.c_[static_cast<std::size_t>(j)].get_mpz_t());
            }
        }
    }

    /// this += s * a for an integer scalar s.
    void addmul_scalar(const OmegaPoly& a, const Integer& s) {
        if (s == 0) return;
        int da = a.degree();
        if (da < 0) return;
        if (static_cast<int>(c_.size()) <= da) c_.resize(static_cast<std::size_t>(da) + 1, Integer(0));
        for (int i = 0; i <= da; ++i)
            mpz_addmul(c_[static_cast<std::size_t>(i)].get_mpz_t(),
                       a.c_[static_cast<std::size_t>(i)].get_mpz_t(), s.get_mpz_t());
    }

    /// this * omega^k
    OmegaPoly times_power(int k) const {
        detail::require(k >= 0, "times_power: exponent must be nonnegative");
        int d = degree();
        if (d < 0) return OmegaPoly();
        OmegaPoly r;
        r.c_.assign(static_cast<std::size_t>(d + k) + 1, Integer(0));
        for (int i = 0; i <= d; ++i) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
        return r;
    }

    /// Copy with every coefficient above cap dropped.
    OmegaPoly truncated(int cap) const {
        if (cap < 0) return OmegaPoly();
        OmegaPoly r = *this;
        if (r.c_.size() > static_cast<std::size_t>(cap) + 1)
            r.c_.resize(static_cast<std::size_t>(cap) + 1);
        return r;
    }

    /// Exact value at a rational point.
    Rational eval(const Rational& omega) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i > 0; --i) {
            acc *= omega;
            acc += Rational(c_[i - 1]);
        }
        acc.canonicalize();
        return acc;
    }

    /// Drop trailing zero storage.
    void normalize() { c_.resize(static_cast<std::size_t>(degree() + 1)); }

    friend bool operator==(const OmegaPoly& a, const OmegaPoly& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return false;
        for (int i = 0; i <= da; ++i)
            if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    friend bool operator!=(const OmegaPoly& a, const OmegaPoly& b) { return !(a == b); }

private:
    std::vector<Integer> c_;
};

}  // namespace oscpath
