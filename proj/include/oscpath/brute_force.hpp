#pragma once

#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/matchings.hpp"
#include "oscpath/omega_poly.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

/// Literal enumeration of walker systems: depth-first over all step choices,
/// checking the definition directly at every time slice.  A configuration
/// contributes w^k where k is its total number of osculations (adjacent
/// equal heights summed over interior times).
///
/// This is the ground-truth oracle and deliberately does nothing clever;
/// the n * t <= 24 guard keeps it at desk scale (BudgetError beyond).
inline OmegaPoly brute_force(const ProblemSpec& spec, const Deadline& deadline = {}) {
    const int n = spec.n();
    const int t = spec.t();
    if (n * t > 24)
        throw BudgetError("brute force enumeration refused: n * t exceeds 24 steps");
    if (!spec.reachable()) return OmegaPoly();

    std::vector<Integer> counts(static_cast<std::size_t>(spec.omega_degree_bound()) + 1, Integer(0));
    std::vector<std::vector<int>> h(static_cast<std::size_t>(t) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n)));
    h[0] = spec.y_start();

    // Walk time slice by time slice; osc accumulates osculations so far.
    auto rec = [&](auto&& self, int tau, int osc) -> void {
        if (tau == t) {
            if (h[static_cast<std::size_t>(tau)] == spec.y_end())
                counts[static_cast<std::size_t>(osc)] += 1;
            return;
        }
        deadline.check("path enumeration");
        const auto& cur = h[static_cast<std::size_t>(tau)];
        auto& nxt = h[static_cast<std::size_t>(tau) + 1];
        for (int mask = 0; mask < (1 << n); ++mask) {
            // No two walkers may share a step: same height now and the same
            // move would traverse one edge twice.
            bool shared = false;
            for (int a = 0; a < n && !shared; ++a)
                for (int b = a + 1; b < n && !shared; ++b)
                    shared = cur[static_cast<std::size_t>(a)] == cur[static_cast<std::size_t>(b)] &&
                             ((mask >> a) & 1) == ((mask >> b) & 1);
            if (shared) continue;
            for (int a = 0; a < n; ++a)
                nxt[static_cast<std::size_t>(a)] =
                    cur[static_cast<std::size_t>(a)] + ((mask >> a) & 1 ? 1 : -1);
            int new_osc = 0;
            if (tau + 1 < t) {
                if (!is_osculating_sequence(nxt)) continue;
                for (int a = 0; a + 1 < n; ++a)
                    if (nxt[static_cast<std::size_t>(a)] == nxt[static_cast<std::size_t>(a) + 1])
                        ++new_osc;
            }
            self(self, tau + 1, osc + new_osc);
        }
    };
    rec(rec, 0, 0);

    return OmegaPoly(std::move(counts));
}

}  // namespace oscpath
