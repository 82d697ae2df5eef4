#pragma once

#include <span>
#include <utility>
#include <vector>

#include "oscpath/errors.hpp"

namespace oscpath {

/// Is y a valid interior height profile: weakly increasing, with equal
/// values only in isolated adjacent pairs (no three in a row, and no two
/// equal pairs back to back)?
inline bool is_osculating_sequence(std::span<const int> y) {
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (y[i] > y[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        if (y[i] != y[i + 1]) continue;
        if (i > 0 && y[i - 1] == y[i]) return false;
        if (i + 2 < y.size() && y[i + 1] == y[i + 2]) return false;
    }
    return true;
}

inline bool is_strictly_increasing(std::span<const int> y) {
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (y[i] >= y[i + 1]) return false;
    return true;
}

/// Matching of the path graph on vertices {0, ..., n-1} with edges
/// (i, i+1): a set of pairwise disjoint edges, stored by their lower
/// endpoints in increasing order.
class Matching {
public:
    Matching(int n, std::vector<int> edge_lows) : n_(n), lows_(std::move(edge_lows)) {
        detail::require(n >= 1, "matching on an empty vertex set");
        int prev = -2;
        for (int v : lows_) {
            detail::require(v >= 0 && v + 1 < n, "matching edge out of range");
            detail::require(v >= prev + 2, "matching edges overlap");
            prev = v;
        }
    }

    static Matching empty(int n) { return Matching(n, {}); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(lows_.size()); }

    /// Lower endpoints of the chosen edges, increasing.
    const std::vector<int>& edge_lows() const { return lows_; }

    /// Vertices not covered by any edge, increasing.
    std::vector<int> isolated() const {
        std::vector<char> covered(static_cast<std::size_t>(n_), 0);
        for (int v : lows_) covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(v + 1)] = 1;
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (!covered[static_cast<std::size_t>(i)]) out.push_back(i);
        return out;
    }

    /// Is vertex i the lower (upper) endpoint of a chosen edge?
    bool lower_endpoint(int i) const {
        for (int v : lows_)
            if (v == i) return true;
        return false;
    }
    bool upper_endpoint(int i) const {
        for (int v : lows_)
            if (v + 1 == i) return true;
        return false;
    }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.n_ == b.n_ && a.lows_ == b.lows_;
    }
    friend bool operator!=(const Matching& a, const Matching& b) { return !(a == b); }

private:
    int n_;
    std::vector<int> lows_;
};

/// All matchings of the n-vertex path graph.  There are F_n of them
/// (Fibonacci with F_1 = 1, F_2 = 2): a matching either leaves vertex n-1
/// isolated or pairs it with n-2.
inline std::vector<Matching> all_matchings(int n) {
    detail::require(n >= 1, "all_matchings: n must be positive");
    std::vector<std::vector<std::vector<int>>> lows_by_size(static_cast<std::size_t>(n) + 1);
    lows_by_size[0] = {{}};
    if (n >= 1) lows_by_size[1] = {{}};
    for (int m = 2; m <= n; ++m) {
        auto& cur = lows_by_size[static_cast<std::size_t>(m)];
        for (const auto& s : lows_by_size[static_cast<std::size_t>(m - 1)]) cur.push_back(s);
        for (const auto& s : lows_by_size[static_cast<std::size_t>(m - 2)]) {
            auto e = s;
            e.push_back(m - 2);
            cur.push_back(std::move(e));
        }
    }
    std::vector<Matching> out;
    out.reserve(lows_by_size[static_cast<std::size_t>(n)].size());
    for (auto& lows : lows_by_size[static_cast<std::size_t>(n)]) out.emplace_back(n, std::move(lows));
    return out;
}

/// The matching an interior height profile induces: vertices a and a+1 are
/// paired exactly when y_a = y_{a+1}.  Throws SpecError when y is not an
/// osculating sequence.
inline Matching matching_of_sequence(std::span<const int> y) {
    if (!is_osculating_sequence(y))
        throw SpecError("height profile is not an osculating sequence");
    std::vector<int> lows;
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (y[i] == y[i + 1]) lows.push_back(static_cast<int>(i));
    return Matching(static_cast<int>(y.size()), std::move(lows));
}

/// Step choices per walker under a matching: an isolated vertex may move
/// either way, the lower endpoint of an edge must step down, the upper
/// endpoint must step up.
inline std::vector<std::vector<int>> step_sets(const Matching& m) {
    std::vector<std::vector<int>> v(static_cast<std::size_t>(m.vertex_count()));
    for (int i = 0; i < m.vertex_count(); ++i) {
        if (m.lower_endpoint(i))
            v[static_cast<std::size_t>(i)] = {-1};
        else if (m.upper_endpoint(i))
            v[static_cast<std::size_t>(i)] = {+1};
        else
            v[static_cast<std::size_t>(i)] = {+1, -1};
    }
    return v;
}

}  // namespace oscpath
