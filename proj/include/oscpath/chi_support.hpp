#pragma once

#include <cstdint>
#include <vector>

#include "oscpath/errors.hpp"

namespace oscpath {

/// One sign vector chi in {+1, -1}^n together with its coefficient c_chi.
struct ChiTerm {
    std::vector<std::int8_t> chi;
    int coeff;
};

/// The sign vector with +1 in the first `plus_count` positions and -1 in the
/// remaining ones.
///
/// Staircase vectors are the useful sign choices for the constant-term sum:
/// every sign vector yields the counting polynomial's coefficients up to its
/// true degree, but above the degree most vectors acquire spurious nonzero
/// coefficients.  The junk-free vectors always form a contiguous staircase
/// band whose position depends on the boundary geometry (roughly, net upward
/// drift of the walkers pushes the band towards larger plus counts), and the
/// band always covers the majority of the family.  The evaluator therefore
/// runs the whole family and takes the plurality value; see ct_evaluate.
inline std::vector<std::int8_t> staircase_chi(int n, int plus_count) {
    detail::require(n >= 1, "staircase_chi: n must be positive");
    detail::require(plus_count >= 0 && plus_count <= n,
                    "staircase_chi: plus_count out of range");
    std::vector<std::int8_t> chi(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < plus_count; ++i) chi[static_cast<std::size_t>(i)] = 1;
    return chi;
}

/// Canonical normalized support: the one-plus staircase with coefficient 1.
/// The evaluator generalizes this to the whole staircase family and votes
/// (see ct_evaluate), but the family members each enter with coefficient 1,
/// and any single junk-free member — this one on undrifted instances — is
/// already the exact sum.  The coefficients summing to 1 is what makes the
/// zero-step ensemble reduce to a point mass.
inline std::vector<ChiTerm> chi_support(int n) {
    detail::require(n >= 1, "chi_support: n must be positive");
    return {ChiTerm{staircase_chi(n, 1), 1}};
}

}  // namespace oscpath
