#include "symfix/permutation.hpp"

#include <numeric>

namespace symfix {

Permutation::Permutation(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw DomainError("permutation image table is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& g) const {
    if (size() != g.size()) throw DomainError("composing permutations of different degree");
    std::vector<int> img(img_.size());
    for (std::size_t v = 0; v < img_.size(); ++v) img[v] = img_[static_cast<std::size_t>(g.img_[v])];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t v = 0; v < img_.size(); ++v) img[static_cast<std::size_t>(img_[v])] = static_cast<int>(v);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t v = 0; v < img_.size(); ++v)
        if (img_[v] != static_cast<int>(v)) return false;
    return true;
}

std::vector<int> Permutation::fixed_points() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < img_.size(); ++v)
        if (img_[v] == static_cast<int>(v)) out.push_back(static_cast<int>(v));
    return out;
}

std::uint64_t Permutation::fixed_points_mask() const {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < img_.size(); ++v)
        if (img_[v] == static_cast<int>(v)) mask |= std::uint64_t{1} << v;
    return mask;
}

int Permutation::fixed_point_count() const {
    int k = 0;
    for (std::size_t v = 0; v < img_.size(); ++v)
        if (img_[v] == static_cast<int>(v)) ++k;
    return k;
}

std::vector<std::vector<int>> Permutation::moved_cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || img_[static_cast<std::size_t>(start)] == start) continue;
        std::vector<int> cycle;
        int v = start;
        while (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
            v = img_[static_cast<std::size_t>(v)];
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::cycles() const {
    auto moved = moved_cycles();
    if (moved.empty()) return "()";
    std::string out;
    for (const auto& cycle : moved) {
        out.push_back('(');
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out.push_back(' ');
            out += std::to_string(cycle[i]);
        }
        out.push_back(')');
    }
    return out;
}

}  // namespace symfix
