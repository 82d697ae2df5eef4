#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "oscpath/errors.hpp"
#include "oscpath/laurent.hpp"

namespace oscpath {

/// The height convention used throughout: walker a starts at 2(a-1).
inline std::vector<int> default_heights(int n) {
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) y[static_cast<std::size_t>(a)] = 2 * a;
    return y;
}

/// An instance of the counting problem: n walkers, t time steps, start
/// heights y_start (all even, strictly increasing) and end heights y_end
/// (strictly increasing, all of parity t).
///
/// Construction validates ordering and parity and throws SpecError on any
/// violation.  Whether the end heights are actually reachable in t steps is
/// a separate question (reachable()); every counting method returns the
/// zero polynomial for unreachable instances rather than failing.
class ProblemSpec {
public:
    ProblemSpec(int n, int t, std::vector<int> y_start, std::vector<int> y_end)
        : n_(n), t_(t), ys_(std::move(y_start)), ye_(std::move(y_end)) {
        if (n_ < 1) throw SpecError("walker count must be at least 1");
        if (n_ > kMaxVars)
            throw SpecError("walker count exceeds the supported maximum of " +
                            std::to_string(kMaxVars));
        if (t_ < 0) throw SpecError("time horizon must be nonnegative");
        if (ys_.size() != static_cast<std::size_t>(n_) || ye_.size() != static_cast<std::size_t>(n_))
            throw SpecError("height list length differs from walker count");
        for (std::size_t i = 0; i < ys_.size(); ++i) {
            if (ys_[i] % 2 != 0) throw SpecError("start heights must be even");
            if (i + 1 < ys_.size() && ys_[i] >= ys_[i + 1])
                throw SpecError("start heights must be strictly increasing");
        }
        for (std::size_t i = 0; i < ye_.size(); ++i) {
            if ((std::abs(ye_[i]) % 2) != (std::abs(t_) % 2))
                throw SpecError("end heights must have the parity of t");
            if (i + 1 < ye_.size() && ye_[i] >= ye_[i + 1])
                throw SpecError("end heights must be strictly increasing");
        }
        if (std::abs(t_) > kMaxWindowBound / 4)
            throw SpecError("time horizon beyond desk scale");
        for (int v : ys_)
            if (std::abs(v) > kMaxWindowBound / 4) throw SpecError("start height beyond desk scale");
        for (int v : ye_)
            if (std::abs(v) > kMaxWindowBound / 4) throw SpecError("end height beyond desk scale");
    }

    /// The running example family: n walkers, t = 2n, both height lists at
    /// the default convention.
    static ProblemSpec example(int n) { return example(n, 2 * n); }

    static ProblemSpec example(int n, int t) {
        return ProblemSpec(n, t, default_heights(n), default_heights(n));
    }

    int n() const { return n_; }
    int t() const { return t_; }
    const std::vector<int>& y_start() const { return ys_; }
    const std::vector<int>& y_end() const { return ye_; }

    /// Can each walker cover its height difference in t steps?
    bool reachable() const {
        for (int a = 0; a < n_; ++a)
            if (std::abs(ye_[static_cast<std::size_t>(a)] - ys_[static_cast<std::size_t>(a)]) > t_)
                return false;
        return true;
    }

    /// Degree bound on the counting polynomial: at most floor(n/2)
    /// osculations at each of the t-1 interior times.
    int omega_degree_bound() const { return t_ > 0 ? (n_ / 2) * (t_ - 1) : 0; }

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        return a.n_ == b.n_ && a.t_ == b.t_ && a.ys_ == b.ys_ && a.ye_ == b.ye_;
    }

private:
    int n_;
    int t_;
    std::vector<int> ys_, ye_;
};

}  // namespace oscpath
