#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <span>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "oscpath/chi_support.hpp"
#include "oscpath/errors.hpp"
#include "oscpath/laurent.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/omega_poly.hpp"
#include "oscpath/permutations.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

/// Evaluation settings for the constant-term engine.
///
/// window is the symmetric per-variable exponent bound offered to the
/// series; omega_cap truncates the omega grading.  Exactness needs
/// window >= safe_window_bound(spec, omega_cap) and
/// omega_cap >= default_omega_cap(spec); ct_evaluate refuses anything less.
struct CtSettings {
    int window = 0;
    int omega_cap = 0;
    int threads = 0;  // 0 = hardware concurrency
};

/// Degree bound of the counting polynomial; truncating below it would lose
/// exact coefficients, so it is the smallest cap ct_evaluate accepts.
inline int default_omega_cap(const ProblemSpec& spec) { return spec.omega_degree_bound(); }

/// Window wide enough that truncation provably drops only terms that cannot
/// reach the constant term: t + n + omega_cap + max_a(|y_a| + |y'_a|).
inline int safe_window_bound(const ProblemSpec& spec, int omega_cap) {
    int maxsum = 0;
    for (int a = 0; a < spec.n(); ++a) {
        int s = std::abs(spec.y_end()[static_cast<std::size_t>(a)]) +
                std::abs(spec.y_start()[static_cast<std::size_t>(a)]);
        maxsum = std::max(maxsum, s);
    }
    return spec.t() + spec.n() + omega_cap + maxsum;
}

inline CtSettings default_ct_settings(const ProblemSpec& spec) {
    CtSettings s;
    s.omega_cap = default_omega_cap(spec);
    s.window = safe_window_bound(spec, s.omega_cap);
    return s;
}

namespace detail {

/// Series form of the two-walker interaction factor for variables a, b with
/// signs chi_a, chi_b, on the given window:
///
///   s = -1 + sum_{k>=1} w^k L^k (A^{k-2} - A^k),
///
/// where L = (1/lambda_a)(1/lambda_b) expanded geometrically and
/// A = x_a^{chi_a} / x_b^{chi_b} (A^{-1} appears for k = 1).  Every piece of
/// every grade has nonnegative exponents in both variables, so one-sided
/// windows [0, hi] lose nothing.
inline LaurentSeries build_s_factor(int vars, int a, int b, int chi_a, int chi_b,
                                    const Window& w, int cap) {
    require(a >= 0 && a < vars && b >= 0 && b < vars && a != b,
            "interaction factor needs two distinct variables");
    require(chi_a == 1 || chi_a == -1, "chi_a must be +1 or -1");
    require(chi_b == 1 || chi_b == -1, "chi_b must be +1 or -1");

    // The grade-k term shifts L^k by up to k lanes in either direction, so
    // terms of L^k from outside the target window can land inside it.  Build
    // everything on a cap-padded window and restrict at the end; the shift
    // magnitude never exceeds the grade, so cap padding is enough.
    std::vector<int> plo(static_cast<std::size_t>(vars)), phi(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) {
        require(w.hi(i) <= kMaxWindowBound - cap && w.lo(i) >= -(kMaxWindowBound - cap),
                "window plus omega cap exceeds the packed exponent range");
        plo[static_cast<std::size_t>(i)] = w.lo(i) - cap;
        phi[static_cast<std::size_t>(i)] = w.hi(i) + cap;
    }
    Window wp(std::move(plo), std::move(phi));

    LaurentSeries inv_l = inv_lambda_series(vars, a, wp, cap) * inv_lambda_series(vars, b, wp, cap);
    LaurentSeries s = LaurentSeries::constant(vars, wp, cap, OmegaPoly(-1));

    std::vector<int> cross(static_cast<std::size_t>(vars), 0);
    cross[static_cast<std::size_t>(a)] = chi_a;
    cross[static_cast<std::size_t>(b)] = -chi_b;
    std::vector<int> down(static_cast<std::size_t>(vars)), up(static_cast<std::size_t>(vars));

    LaurentSeries lk = LaurentSeries::constant(vars, wp, cap, OmegaPoly(1));
    for (int k = 1; k <= cap; ++k) {
        lk = lk * inv_l;
        if (lk.is_zero()) break;
        for (int i = 0; i < vars; ++i) {
            down[static_cast<std::size_t>(i)] = (k - 2) * cross[static_cast<std::size_t>(i)];
            up[static_cast<std::size_t>(i)] = k * cross[static_cast<std::size_t>(i)];
        }
        LaurentSeries term = lk.shifted(down);
        term += lk.shifted(up).scaled(OmegaPoly(-1));
        s += term.scaled(OmegaPoly::monomial(Integer(1), k));
    }
    return s.restricted(w);
}

}  // namespace detail

/// Interaction factor as a truncated series on the symmetric window of the
/// given settings.  Unit-test surface for the engine internals.
inline LaurentSeries s_factor_series(int vars, int a, int b, int chi_a, int chi_b,
                                     const CtSettings& st) {
    return detail::build_s_factor(vars, a, b, chi_a, chi_b, Window::symmetric(vars, st.window),
                                  st.omega_cap);
}

/// Product of interaction factors over the inversion set of sigma, on the
/// symmetric window of the settings.
inline LaurentSeries a_sigma_series(const Permutation& sigma, std::span<const std::int8_t> chi,
                                    const CtSettings& st) {
    const int n = sigma.size();
    detail::require(static_cast<int>(chi.size()) == n, "chi length differs from permutation size");
    Window w = Window::symmetric(n, st.window);
    LaurentSeries p = LaurentSeries::constant(n, w, st.omega_cap, OmegaPoly(1));
    for (auto [a, b] : sigma.inversion_set())
        p = p * detail::build_s_factor(n, a, b, chi[static_cast<std::size_t>(a)],
                                       chi[static_cast<std::size_t>(b)], w, st.omega_cap);
    return p;
}

namespace detail {

struct CtContext {
    const ProblemSpec& spec;
    int cap;
    std::vector<int> engine_hi;                      // per-variable clamp min(window, U_a)
    std::vector<Integer> binrow;                     // C(t, 0..t)
    std::vector<Permutation> sigmas;
    std::vector<ChiTerm> chis;
    std::map<std::tuple<int, int, int, int>, LaurentSeries> factors;
};

/// One unit of work for the task runner: a (sigma, chi) summand and the
/// output slot its contribution belongs to.
struct CtTask {
    const Permutation* sigma;
    const ChiTerm* chi;
    int slot;
};

/// One (sigma, chi) summand accumulated into acc.  The variable-a monomial
/// offset is m_a = chi_a (y_{sigma(a)} - y'_a); the factor product is taken
/// over the inversion set of sigma, pruned to exponents that can still meet
/// a nonzero path count, and each surviving term is weighted by
/// prod_a C(t, (t + e_a + m_a)/2), the constant-term mass Lambda^t assigns.
inline void ct_accumulate_task(const CtContext& ctx, const Permutation& sigma,
                               const ChiTerm& chi, OmegaPoly& acc) {
    const int n = ctx.spec.n();
    const int t = ctx.spec.t();
    std::vector<int> m(static_cast<std::size_t>(n));
    std::vector<int> lo(static_cast<std::size_t>(n), 0), hi(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        m[static_cast<std::size_t>(a)] =
            chi.chi[static_cast<std::size_t>(a)] *
            (ctx.spec.y_end()[static_cast<std::size_t>(sigma(a))] -
             ctx.spec.y_start()[static_cast<std::size_t>(a)]);
        // Factor exponents only ever grow, so anything above t - m_a can
        // never come back under the reach of Lambda^t: prune it during the
        // product.  The lower cutoff -t - m_a cannot be pruned early (later
        // factors may still lift an exponent past it); it is applied in the
        // final weighting.
        int h = std::min(ctx.engine_hi[static_cast<std::size_t>(a)],
                         t - m[static_cast<std::size_t>(a)]);
        if (h < 0) return;
        if (h + m[static_cast<std::size_t>(a)] < -t) return;
        hi[static_cast<std::size_t>(a)] = h;
    }

    Window tw(lo, hi);
    LaurentSeries p = LaurentSeries::constant(n, tw, ctx.cap, OmegaPoly(1));
    for (auto [a, b] : sigma.inversion_set()) {
        auto it = ctx.factors.find({a, b, chi.chi[static_cast<std::size_t>(a)],
                                    chi.chi[static_cast<std::size_t>(b)]});
        require(it != ctx.factors.end(), "interaction factor missing from the table");
        p = p * it->second.restricted(tw);
        if (p.is_zero()) return;
    }

    p.for_each_term([&](const PackedExp& key, const OmegaPoly& poly) {
        Integer weight(1);
        for (int a = 0; a < n; ++a) {
            int num = t + key.lane(a) + m[static_cast<std::size_t>(a)];
            if (num < 0 || num > 2 * t) {
                weight = 0;
                break;
            }
            require((num & 1) == 0, "odd exponent offset slipped past the parity argument");
            weight *= ctx.binrow[static_cast<std::size_t>(num / 2)];
        }
        if (weight == 0) return;
        if (chi.coeff < 0) weight = -weight;
        acc.addmul_scalar(poly, weight);
    });
}

/// Populate ctx.engine_hi and ctx.factors for the sign vectors in ctx.chis,
/// then run the given tasks over a worker pool, reducing each task's
/// contribution into its slot.  Integer arithmetic is exact, so the result
/// does not depend on the schedule.
inline std::vector<OmegaPoly> ct_run_tasks(CtContext& ctx, int window, int slots,
                                           int threads_requested,
                                           const std::vector<CtTask>& tasks,
                                           const Deadline& deadline) {
    const int n = ctx.spec.n();
    const int t = ctx.spec.t();
    for (int a = 0; a < n; ++a) {
        int reach = 0;
        for (int j = 0; j < n; ++j)
            reach = std::max(reach, std::abs(ctx.spec.y_end()[static_cast<std::size_t>(j)] -
                                             ctx.spec.y_start()[static_cast<std::size_t>(a)]));
        ctx.engine_hi[static_cast<std::size_t>(a)] = std::min(window, t + reach);
    }

    Window ew(std::vector<int>(static_cast<std::size_t>(n), 0), ctx.engine_hi);
    for (const ChiTerm& c : ctx.chis)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                std::tuple<int, int, int, int> key{a, b, c.chi[static_cast<std::size_t>(a)],
                                                   c.chi[static_cast<std::size_t>(b)]};
                if (!ctx.factors.contains(key))
                    ctx.factors.emplace(key, build_s_factor(
                                                 n, a, b, c.chi[static_cast<std::size_t>(a)],
                                                 c.chi[static_cast<std::size_t>(b)], ew, ctx.cap));
            }

    unsigned workers = threads_requested > 0 ? static_cast<unsigned>(threads_requested)
                                             : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(tasks.size()));
    workers = std::max(1u, workers);

    std::vector<std::vector<OmegaPoly>> partial(
        workers, std::vector<OmegaPoly>(static_cast<std::size_t>(slots)));
    if (workers == 1) {
        for (const CtTask& task : tasks) {
            deadline.check("constant term sum");
            ct_accumulate_task(ctx, *task.sigma, *task.chi,
                               partial[0][static_cast<std::size_t>(task.slot)]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex mu;
        std::exception_ptr failure;
        auto body = [&](unsigned wi) {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size() || stop.load()) break;
                    deadline.check("constant term sum");
                    ct_accumulate_task(ctx, *tasks[i].sigma, *tasks[i].chi,
                                       partial[wi][static_cast<std::size_t>(tasks[i].slot)]);
                }
            } catch (...) {
                std::scoped_lock lock(mu);
                if (!failure) failure = std::current_exception();
                stop.store(true);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned wi = 0; wi < workers; ++wi) pool.emplace_back(body, wi);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<OmegaPoly> out(static_cast<std::size_t>(slots));
    for (const auto& per_worker : partial)
        for (int s = 0; s < slots; ++s) out[static_cast<std::size_t>(s)] += per_worker[static_cast<std::size_t>(s)];
    for (OmegaPoly& p : out) p.normalize();
    return out;
}

/// Shared validation for the evaluator entry points.
inline void ct_check_settings(const ProblemSpec& spec, const CtSettings& settings) {
    if (settings.omega_cap < default_omega_cap(spec))
        throw SettingsError("omega cap below the degree bound would truncate the result");
    if (settings.window < safe_window_bound(spec, settings.omega_cap))
        throw SettingsError("window below the safe bound cannot guarantee an exact result");
    if (settings.window > kMaxWindowBound)
        throw SettingsError("window exceeds the packed exponent range");
}

}  // namespace detail

/// Constant-term sum over an explicit sign-vector support: for each ChiTerm
/// and each permutation sigma, the product of interaction factors over the
/// inversions of sigma, shifted by the boundary monomial and weighted
/// against the expansion of Lambda_n^t.
///
/// Exact coefficients are only guaranteed up to the polynomial's true
/// degree; above it the value depends on the support (see ct_evaluate for
/// the junk-free resolution).  Used by tests and diagnostics to probe
/// individual sign vectors.
inline OmegaPoly ct_evaluate(const ProblemSpec& spec, const CtSettings& settings,
                             std::vector<ChiTerm> support, const Deadline& deadline = {}) {
    const int n = spec.n();
    detail::ct_check_settings(spec, settings);
    for (const ChiTerm& c : support)
        detail::require(static_cast<int>(c.chi.size()) == n,
                        "support sign vector length differs from walker count");
    if (!spec.reachable()) return OmegaPoly();

    detail::CtContext ctx{spec,
                          settings.omega_cap,
                          std::vector<int>(static_cast<std::size_t>(n)),
                          binomial_row(spec.t()),
                          all_permutations(n),
                          std::move(support),
                          {}};
    std::vector<detail::CtTask> tasks;
    tasks.reserve(ctx.sigmas.size() * ctx.chis.size());
    for (const ChiTerm& c : ctx.chis)
        for (const Permutation& s : ctx.sigmas) tasks.push_back({&s, &c, 0});
    return detail::ct_run_tasks(ctx, settings.window, 1, settings.threads, tasks, deadline)[0];
}

/// Constant-term sum for every staircase sign vector, one result per plus
/// count k = 0..n.  All n+1 sums share one interaction-factor table and one
/// worker pool.  The entries agree up to the counting polynomial's true
/// degree; above it each entry either carries the exact coefficients (zeros
/// included) or sign-vector-specific junk, and the junk-free entries always
/// form a contiguous majority band (see ct_evaluate).
inline std::vector<OmegaPoly> ct_evaluate_family(const ProblemSpec& spec,
                                                 const CtSettings& settings,
                                                 const Deadline& deadline = {}) {
    const int n = spec.n();
    detail::ct_check_settings(spec, settings);
    if (!spec.reachable()) return std::vector<OmegaPoly>(static_cast<std::size_t>(n) + 1);

    std::vector<ChiTerm> family;
    family.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) family.push_back({staircase_chi(n, k), 1});

    detail::CtContext ctx{spec,
                          settings.omega_cap,
                          std::vector<int>(static_cast<std::size_t>(n)),
                          binomial_row(spec.t()),
                          all_permutations(n),
                          std::move(family),
                          {}};
    std::vector<detail::CtTask> tasks;
    tasks.reserve(ctx.sigmas.size() * ctx.chis.size());
    for (int k = 0; k <= n; ++k)
        for (const Permutation& s : ctx.sigmas)
            tasks.push_back({&s, &ctx.chis[static_cast<std::size_t>(k)], k});
    return detail::ct_run_tasks(ctx, settings.window, n + 1, settings.threads, tasks, deadline);
}

/// Evaluate the counting polynomial as the constant term of the scattering
/// sum, resolved over the staircase sign-vector family.
///
/// Every staircase gives the exact coefficients up to the polynomial's true
/// degree.  Above the degree, a geometry-dependent contiguous band of the
/// family stays exact (all zeros up to the cap) while the remaining vectors
/// pick up junk that always extends the polynomial upward: a junky entry
/// agrees with the exact one below some grade and adds nonzero coefficients
/// above the true degree.  The exact band covers at least three plus counts
/// for n >= 2 across all observed instances, so the resolution is:
///
///   1. a unique plurality value with multiplicity >= 2 wins;
///   2. on a tie, the minimal-degree value wins, provided it has
///      multiplicity >= 2, no other value matches its degree, and every
///      competitor agrees with it on all grades up to its degree (the
///      junk-extension shape);
///
/// anything else — and any winner violating the degree bound — throws
/// EvalError rather than return an unverified value.
///
/// Exact for window >= safe_window_bound(spec, omega_cap) and
/// omega_cap >= default_omega_cap(spec); anything smaller throws
/// SettingsError.  The (sigma, staircase) summands are distributed over
/// threads; integer arithmetic is exact, so the result does not depend on
/// the schedule.
inline OmegaPoly ct_evaluate(const ProblemSpec& spec, const CtSettings& settings,
                             const Deadline& deadline = {}) {
    std::vector<OmegaPoly> family = ct_evaluate_family(spec, settings, deadline);
    std::vector<int> votes(family.size(), 0);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (family[i] == family[j]) ++votes[i];
    int best = 0, second = 0;
    std::size_t winner = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (votes[i] > best) {
            best = votes[i];
            winner = i;
        }
    for (std::size_t i = 0; i < family.size(); ++i)
        if (!(family[i] == family[winner])) second = std::max(second, votes[i]);

    if (spec.n() >= 2 && (best < 2 || second >= best)) {
        // Tied vote: fall back to the minimal-degree value and insist the
        // competitors look like junk extensions of it.
        std::size_t low = 0;
        for (std::size_t i = 1; i < family.size(); ++i)
            if (family[i].degree() < family[low].degree()) low = i;
        int deg = family[low].degree();
        int count = 0;
        bool shape_ok = true;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i] == family[low]) {
                ++count;
                continue;
            }
            if (family[i].degree() <= deg) shape_ok = false;
            for (int g = 0; g <= deg && shape_ok; ++g)
                if (family[i].coeff(g) != family[low].coeff(g)) shape_ok = false;
        }
        if (count < 2 || !shape_ok)
            throw EvalError("staircase family failed to produce a plurality value");
        winner = low;
    }
    if (family[winner].degree() > spec.omega_degree_bound())
        throw EvalError("plurality value violates the degree bound");
    return family[winner];
}

/// ct_evaluate at the safe defaults, then again with the window doubled,
/// until two consecutive evaluations agree.  The safe bound makes the first
/// doubling already a pure confirmation run; the loop is the stated
/// stability contract, not a search.
inline OmegaPoly ct_evaluate_auto(const ProblemSpec& spec, const CtSettings& base,
                                  const Deadline& deadline = {}) {
    CtSettings st = base;
    st.omega_cap = std::max(st.omega_cap, default_omega_cap(spec));
    st.window = std::max(st.window, safe_window_bound(spec, st.omega_cap));
    OmegaPoly prev = ct_evaluate(spec, st, deadline);
    for (;;) {
        if (st.window > kMaxWindowBound / 2)
            throw BudgetError("window doubling exhausted the packed exponent range");
        st.window *= 2;
        OmegaPoly cur = ct_evaluate(spec, st, deadline);
        if (cur == prev) return cur;
        prev = std::move(cur);
    }
}

inline OmegaPoly ct_evaluate_auto(const ProblemSpec& spec, const Deadline& deadline = {}) {
    return ct_evaluate_auto(spec, CtSettings{}, deadline);
}

}  // namespace oscpath
