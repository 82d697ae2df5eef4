#pragma once

#include <cstdlib>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/laurent.hpp"
#include "oscpath/matchings.hpp"
#include "oscpath/omega_poly.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

namespace detail {

using DpLayer = std::unordered_map<PackedExp, OmegaPoly, PackedExpHash>;

inline PackedExp pack_heights(std::span<const int> h) { return pack_exponents(h); }

}  // namespace detail

/// Count weighted configurations by evolving the transfer recurrence
///
///   r(y; tau+1) = w^{edges(M(y))} * sum_{e in v^M(y)} r(y + e; tau)
///
/// layer by layer from r(y; 0) = [y == y_start], where M(y) is the matching
/// induced by the profile y and v^M constrains each walker's previous step.
/// Interior layers range over osculating sequences; the final layer over
/// strictly increasing profiles.  The result is read off at y_end.
///
/// Completely independent of the series machinery: only profile maps and
/// OmegaPoly arithmetic.
inline OmegaPoly dp_run(const ProblemSpec& spec, const Deadline& deadline = {}) {
    const int n = spec.n();
    const int t = spec.t();
    if (!spec.reachable()) return OmegaPoly();

    detail::DpLayer layer;
    layer.emplace(detail::pack_heights(spec.y_start()), OmegaPoly(1));

    std::vector<int> h(static_cast<std::size_t>(n));
    std::vector<int> cand(static_cast<std::size_t>(n));
    std::vector<int> prev(static_cast<std::size_t>(n));

    for (int tau = 1; tau <= t; ++tau) {
        deadline.check("transfer recurrence");
        const bool final_layer = tau == t;
        const int slack = t - tau;

        // Candidate profiles at time tau: every +-1 perturbation of a live
        // profile at time tau-1, filtered by profile validity and by
        // reachability of y_end in the remaining steps.
        std::unordered_set<PackedExp, PackedExpHash> cands;
        for (const auto& [key, poly] : layer) {
            (void)poly;
            for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = key.lane(i);
            for (int mask = 0; mask < (1 << n); ++mask) {
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    cand[static_cast<std::size_t>(i)] =
                        h[static_cast<std::size_t>(i)] + ((mask >> i) & 1 ? 1 : -1);
                    if (std::abs(cand[static_cast<std::size_t>(i)] -
                                 spec.y_end()[static_cast<std::size_t>(i)]) > slack) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (final_layer ? !is_strictly_increasing(cand) : !is_osculating_sequence(cand))
                    continue;
                cands.insert(detail::pack_heights(cand));
            }
        }

        detail::DpLayer next;
        next.reserve(cands.size());
        for (const PackedExp& key : cands) {
            for (int i = 0; i < n; ++i) cand[static_cast<std::size_t>(i)] = key.lane(i);
            const Matching m = matching_of_sequence(cand);
            const auto steps = step_sets(m);

            // Sum r(y + e; tau-1) over the step choices e in v^M.
            OmegaPoly sum;
            std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
            for (;;) {
                for (int i = 0; i < n; ++i)
                    prev[static_cast<std::size_t>(i)] =
                        cand[static_cast<std::size_t>(i)] +
                        steps[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
                auto it = layer.find(detail::pack_heights(prev));
                if (it != layer.end()) sum += it->second;
                int i = 0;
                while (i < n && ++pick[static_cast<std::size_t>(i)] >=
                                    steps[static_cast<std::size_t>(i)].size()) {
                    pick[static_cast<std::size_t>(i)] = 0;
                    ++i;
                }
                if (i == n) break;
            }
            if (!sum.is_zero()) next.emplace(key, sum.times_power(m.edge_count()));
        }
        layer = std::move(next);
    }

    // Every surviving profile in the final layer must be strictly
    // increasing; this is the boundary condition, not a sampling check.
    for (const auto& [key, poly] : layer) {
        (void)poly;
        for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = key.lane(i);
        detail::require(is_strictly_increasing(h), "final transfer layer holds a non-strict profile");
    }

    auto it = layer.find(detail::pack_heights(spec.y_end()));
    return it == layer.end() ? OmegaPoly() : it->second;
}

}  // namespace oscpath
