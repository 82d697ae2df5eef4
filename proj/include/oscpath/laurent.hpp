#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/omega_poly.hpp"

namespace oscpath {

/// Hard bound on the number of series variables (one per walker).
inline constexpr int kMaxVars = 8;

/// Largest per-variable exponent magnitude a window may request.  Keeps the
/// packed 16-bit lanes safely away from overflow under key addition.
inline constexpr int kMaxWindowBound = 4096;

namespace detail {

inline constexpr int kLaneBias = 16384;
inline constexpr std::uint64_t kBiasWord = 0x4000400040004000ULL;

}  // namespace detail

/// Exponent vector of up to kMaxVars variables packed into two 64-bit words,
/// one biased 16-bit lane per variable.  Lanes stay well inside 16 bits for
/// any window this library accepts, so key addition is two word additions
/// with a bias correction and never carries across lanes.
struct PackedExp {
    std::uint64_t w0 = detail::kBiasWord;
    std::uint64_t w1 = detail::kBiasWord;

    static PackedExp zero() { return PackedExp{}; }

    int lane(int i) const {
        std::uint64_t w = i < 4 ? w0 : w1;
        int shift = 16 * (i & 3);
        return static_cast<int>((w >> shift) & 0xFFFF) - detail::kLaneBias;
    }

    void set_lane(int i, int v) {
        std::uint64_t& w = i < 4 ? w0 : w1;
        int shift = 16 * (i & 3);
        w &= ~(0xFFFFULL << shift);
        w |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(v + detail::kLaneBias)) << shift;
    }

    /// Lanewise sum of exponents.
    PackedExp plus(const PackedExp& o) const {
        return PackedExp{w0 + o.w0 - detail::kBiasWord, w1 + o.w1 - detail::kBiasWord};
    }

    friend bool operator==(const PackedExp& a, const PackedExp& b) {
        return a.w0 == b.w0 && a.w1 == b.w1;
    }
};

struct PackedExpHash {
    std::size_t operator()(const PackedExp& k) const {
        std::uint64_t x = k.w0 * 0x9E3779B97F4A7C15ULL ^ k.w1;
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

inline PackedExp pack_exponents(std::span<const int> exps) {
    detail::require(exps.size() <= static_cast<std::size_t>(kMaxVars),
                    "too many variables for packed exponents");
    PackedExp k;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        detail::require(exps[i] >= -2 * kMaxWindowBound && exps[i] <= 2 * kMaxWindowBound,
                        "exponent out of packable range");
        k.set_lane(static_cast<int>(i), exps[i]);
    }
    return k;
}

inline std::vector<int> unpack_exponents(const PackedExp& k, int vars) {
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = k.lane(i);
    return e;
}

/// Per-variable exponent bounds [lo_i, hi_i].  The symmetric window [-W, W]
/// is the user-facing form; the constant-term engine narrows to one-sided
/// boxes internally.
class Window {
public:
    Window(std::vector<int> lo, std::vector<int> hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        detail::require(lo_.size() == hi_.size(), "window bound lists differ in length");
        detail::require(!lo_.empty() && lo_.size() <= static_cast<std::size_t>(kMaxVars),
                        "window variable count out of range");
        for (std::size_t i = 0; i < lo_.size(); ++i) {
            detail::require(lo_[i] <= hi_[i], "window with empty range");
            detail::require(lo_[i] >= -kMaxWindowBound && hi_[i] <= kMaxWindowBound,
                            "window bound exceeds packable range");
        }
    }

    static Window symmetric(int vars, int w) {
        detail::require(vars >= 1 && vars <= kMaxVars, "window variable count out of range");
        detail::require(w >= 0, "window half-width must be nonnegative");
        return Window(std::vector<int>(static_cast<std::size_t>(vars), -w),
                      std::vector<int>(static_cast<std::size_t>(vars), w));
    }

    int vars() const { return static_cast<int>(lo_.size()); }
    int lo(int i) const { return lo_[static_cast<std::size_t>(i)]; }
    int hi(int i) const { return hi_[static_cast<std::size_t>(i)]; }

    bool contains(const PackedExp& k) const {
        for (int i = 0; i < vars(); ++i) {
            int e = k.lane(i);
            if (e < lo(i) || e > hi(i)) return false;
        }
        return true;
    }

    bool contains(std::span<const int> exps) const {
        if (static_cast<int>(exps.size()) != vars()) return false;
        for (int i = 0; i < vars(); ++i)
            if (exps[static_cast<std::size_t>(i)] < lo(i) || exps[static_cast<std::size_t>(i)] > hi(i))
                return false;
        return true;
    }

    Window intersect(const Window& o) const {
        detail::require(vars() == o.vars(), "window intersection: variable count mismatch");
        std::vector<int> lo(lo_), hi(hi_);
        for (int i = 0; i < vars(); ++i) {
            lo[static_cast<std::size_t>(i)] = std::max(lo[static_cast<std::size_t>(i)], o.lo(i));
            hi[static_cast<std::size_t>(i)] = std::min(hi[static_cast<std::size_t>(i)], o.hi(i));
        }
        return Window(std::move(lo), std::move(hi));
    }

    friend bool operator==(const Window& a, const Window& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Window& a, const Window& b) { return !(a == b); }

private:
    std::vector<int> lo_, hi_;
};

/// Truncated multivariate Laurent series: a finite sum of monomials
/// x_1^{e_1} ... x_n^{e_n} with OmegaPoly coefficients, restricted to a
/// Window in the exponents and to degree <= omega_cap in omega.
///
/// Addition and multiplication silently drop anything that leaves the
/// window or exceeds the cap; that is the whole point of the type.  Both
/// operands of a product must have the same variable count, window and cap.
class LaurentSeries {
public:
    LaurentSeries(int vars, Window window, int omega_cap)
        : n_(vars), win_(std::move(window)), cap_(omega_cap) {
        detail::require(vars >= 1 && vars <= kMaxVars, "series variable count out of range");
        detail::require(win_.vars() == vars, "window variable count differs from series");
        detail::require(omega_cap >= 0, "omega cap must be nonnegative");
    }

    int vars() const { return n_; }
    const Window& window() const { return win_; }
    int omega_cap() const { return cap_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Add p * x^exps; silently dropped when exps lies outside the window.
    void add_term(std::span<const int> exps, const OmegaPoly& p) {
        detail::require(static_cast<int>(exps.size()) == n_, "term arity mismatch");
        if (!win_.contains(exps)) return;
        OmegaPoly t = p.truncated(cap_);
        if (t.is_zero()) return;
        PackedExp k = pack_exponents(exps);
        auto [it, fresh] = terms_.try_emplace(k, std::move(t));
        if (!fresh) {
            it->second += t;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Coefficient of x^exps (zero polynomial if absent).
    const OmegaPoly& term(std::span<const int> exps) const {
        static const OmegaPoly kZero;
        detail::require(static_cast<int>(exps.size()) == n_, "term arity mismatch");
        if (!win_.contains(exps)) return kZero;
        auto it = terms_.find(pack_exponents(exps));
        return it == terms_.end() ? kZero : it->second;
    }

    /// Coefficient of the zero exponent vector.
    const OmegaPoly& constant_term() const {
        static const OmegaPoly kZero;
        auto it = terms_.find(PackedExp::zero());
        return it == terms_.end() ? kZero : it->second;
    }

    template <class F>
    void for_each_term(F&& f) const {
        for (const auto& [k, p] : terms_) f(k, p);
    }

    static LaurentSeries constant(int vars, const Window& w, int cap, const OmegaPoly& c) {
        LaurentSeries s(vars, w, cap);
        std::vector<int> zero(static_cast<std::size_t>(vars), 0);
        s.add_term(zero, c);
        return s;
    }

    static LaurentSeries monomial(int vars, const Window& w, int cap, std::span<const int> exps,
                                  const OmegaPoly& c) {
        LaurentSeries s(vars, w, cap);
        s.add_term(exps, c);
        return s;
    }

    bool same_shape(const LaurentSeries& o) const {
        return n_ == o.n_ && cap_ == o.cap_ && win_ == o.win_;
    }

    LaurentSeries& operator+=(const LaurentSeries& o) {
        detail::require(same_shape(o), "series sum: operand shape mismatch");
        for (const auto& [k, p] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(k, p);
            if (!fresh) {
                it->second += p;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }

    /// Scalar multiple (the scalar is an OmegaPoly; result is cap-truncated).
    LaurentSeries scaled(const OmegaPoly& s) const {
        LaurentSeries out(n_, win_, cap_);
        if (s.is_zero()) return out;
        for (const auto& [k, p] : terms_) {
            OmegaPoly q = mul_capped(p, s, cap_);
            if (!q.is_zero()) out.terms_.emplace(k, std::move(q));
        }
        return out;
    }

    /// Multiply by the monomial x^exps, dropping terms that leave the window.
    LaurentSeries shifted(std::span<const int> exps) const {
        detail::require(static_cast<int>(exps.size()) == n_, "shift arity mismatch");
        PackedExp d = pack_exponents(exps);
        LaurentSeries out(n_, win_, cap_);
        for (const auto& [k, p] : terms_) {
            PackedExp kk = k.plus(d);
            if (win_.contains(kk)) out.terms_.emplace(kk, p);
        }
        return out;
    }

    /// Copy truncated onto a narrower window.
    LaurentSeries restricted(const Window& narrower) const {
        detail::require(narrower.vars() == n_, "restriction: variable count mismatch");
        LaurentSeries out(n_, narrower, cap_);
        for (const auto& [k, p] : terms_)
            if (narrower.contains(k)) out.terms_.emplace(k, p);
        return out;
    }

    /// Truncated product.  Operands must share variable count, window and cap;
    /// the result lives on that same window.
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        detail::require(a.same_shape(b), "series product: operand shape mismatch");
        LaurentSeries out(a.n_, a.win_, a.cap_);
        if (a.terms_.empty() || b.terms_.empty()) return out;
        const LaurentSeries& big = a.terms_.size() >= b.terms_.size() ? a : b;
        const LaurentSeries& small = a.terms_.size() >= b.terms_.size() ? b : a;
        std::vector<const std::pair<const PackedExp, OmegaPoly>*> flat;
        flat.reserve(small.terms_.size());
        for (const auto& kv : small.terms_) flat.push_back(&kv);
        out.terms_.reserve(big.terms_.size());
        for (const auto& [ka, pa] : big.terms_) {
            for (const auto* kv : flat) {
                PackedExp k = ka.plus(kv->first);
                if (!out.win_.contains(k)) continue;
                out.terms_[k].addmul_capped(pa, kv->second, out.cap_);
            }
        }
        out.normalize();
        return out;
    }

    /// Value equality: same variable count and the same retained terms.
    /// Window and cap are bookkeeping, not part of the value.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.n_ != b.n_) return false;
        std::size_t na = 0;
        for (const auto& [k, p] : a.terms_) {
            if (p.is_zero()) continue;
            ++na;
            auto it = b.terms_.find(k);
            if (it == b.terms_.end() || !(it->second == p)) return false;
        }
        std::size_t nb = 0;
        for (const auto& [k, p] : b.terms_)
            if (!p.is_zero()) ++nb;
        return na == nb;
    }

    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    /// Drop zero coefficients and trailing-zero storage inside each term.
    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) {
                it = terms_.erase(it);
            } else {
                it->second.normalize();
                ++it;
            }
        }
    }

private:
    int n_;
    Window win_;
    int cap_;
    std::unordered_map<PackedExp, OmegaPoly, PackedExpHash> terms_;
};

inline OmegaPoly constant_term(const LaurentSeries& s) { return s.constant_term(); }

/// lambda(x) = x + 1/x for one variable of a multivariate series.
inline LaurentSeries lambda_series(int vars, int var, const Window& w, int cap) {
    detail::require(var >= 0 && var < vars, "lambda_series: variable index out of range");
    LaurentSeries s(vars, w, cap);
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    s.add_term(e, OmegaPoly(1));
    e[static_cast<std::size_t>(var)] = -1;
    s.add_term(e, OmegaPoly(1));
    return s;
}

/// Geometric expansion 1/lambda(x) = sum_{k>=0} (-1)^k x^{2k+1}, truncated to
/// the window of the chosen variable.
inline LaurentSeries inv_lambda_series(int vars, int var, const Window& w, int cap) {
    detail::require(var >= 0 && var < vars, "inv_lambda_series: variable index out of range");
    LaurentSeries s(vars, w, cap);
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int k = 0; 2 * k + 1 <= w.hi(var); ++k) {
        e[static_cast<std::size_t>(var)] = 2 * k + 1;
        s.add_term(e, OmegaPoly(k % 2 == 0 ? 1 : -1));
    }
    return s;
}

/// Exact expansion of Lambda_n^t = prod_a (x_a + 1/x_a)^t.  The window must
/// cover [-t, t] in every variable; anything narrower would silently lose
/// exact terms, so it is refused.
inline LaurentSeries lambda_power(int vars, int t, const Window& w, int cap) {
    detail::require(t >= 0, "lambda_power: negative power");
    for (int i = 0; i < vars; ++i)
        if (w.lo(i) > -t || w.hi(i) < t)
            throw SettingsError("lambda_power: window narrower than the exact support");
    LaurentSeries s(vars, w, cap);
    std::vector<Integer> row = binomial_row(t);
    std::vector<int> j(static_cast<std::size_t>(vars), 0);
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (;;) {
        Integer c(1);
        for (int i = 0; i < vars; ++i) {
            c *= row[static_cast<std::size_t>(j[static_cast<std::size_t>(i)])];
            e[static_cast<std::size_t>(i)] = t - 2 * j[static_cast<std::size_t>(i)];
        }
        s.add_term(e, OmegaPoly(std::move(c)));
        int i = 0;
        while (i < vars && ++j[static_cast<std::size_t>(i)] > t) {
            j[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == vars) break;
    }
    return s;
}

}  // namespace oscpath
