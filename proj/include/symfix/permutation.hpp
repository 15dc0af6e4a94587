#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "symfix/errors.hpp"

namespace symfix {

/// Permutation of {0..n-1} stored as its image table. Composition is
/// function composition: (f.compose(g))(v) == f(g(v)).
class Permutation {
public:
    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int v) const { return img_[static_cast<std::size_t>(v)]; }
    int operator[](int v) const { return apply(v); }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& g) const;
    Permutation inverse() const;
    bool is_identity() const;

    std::vector<int> fixed_points() const;
    std::uint64_t fixed_points_mask() const;
    int fixed_point_count() const;

    /// Disjoint cycle notation over moved points, cycles ordered by least
    /// element, e.g. "(0 1)(2 3)"; the identity prints as "()".
    std::string cycles() const;

    /// The cycles of length >= 2, each rotated to start at its least element,
    /// ordered by that element.
    std::vector<std::vector<int>> moved_cycles() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

}  // namespace symfix
