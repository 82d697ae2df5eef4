#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "oscpath/errors.hpp"

namespace oscpath {

/// Permutation of {0, ..., n-1}, stored as the image list img[i] = sigma(i).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            detail::require(v >= 0 && v < static_cast<int>(img_.size()) && !seen[static_cast<std::size_t>(v)],
                            "image list is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        detail::require(n >= 1, "permutation size must be positive");
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        return Permutation(std::move(inv));
    }

    /// Inversion set C_sigma = { (a, b) : a < b, sigma(a) > sigma(b) },
    /// in lexicographic order.
    std::vector<std::pair<int, int>> inversion_set() const {
        std::vector<std::pair<int, int>> inv;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (img_[static_cast<std::size_t>(a)] > img_[static_cast<std::size_t>(b)])
                    inv.emplace_back(a, b);
        return inv;
    }

    int inversion_count() const {
        int c = 0;
        for (int a = 0; a < size(); ++a)
            for (int b = a + 1; b < size(); ++b)
                if (img_[static_cast<std::size_t>(a)] > img_[static_cast<std::size_t>(b)]) ++c;
        return c;
    }

    int sign() const { return inversion_count() % 2 == 0 ? 1 : -1; }

    /// Advance to the lexicographic successor; false once past the last one.
    bool advance() { return std::next_permutation(img_.begin(), img_.end()); }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<int> img_;
};

/// Visit all n! permutations of {0, ..., n-1} in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
    Permutation p = Permutation::identity(n);
    do {
        f(static_cast<const Permutation&>(p));
    } while (p.advance());
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

}  // namespace oscpath
