#include "symfix/aut_group.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace symfix {

namespace {

// Two colorings of the same graph refined in lockstep: src carries the
// individualized preimages, dst the individualized images. Any automorphism
// compatible with the seeds maps each src color class onto the dst class of
// the same color, which is what makes cell-wise branching complete.
struct Coloring {
    std::vector<int> src;
    std::vector<int> dst;
};

int fresh_tag(const Coloring& c) {
    int m = 0;
    for (int x : c.src) m = std::max(m, x);
    for (int x : c.dst) m = std::max(m, x);
    return m + 1;
}

void individualize(Coloring& c, int u, int v) {
    const int tag = fresh_tag(c);
    c.src[static_cast<std::size_t>(u)] = tag;
    c.dst[static_cast<std::size_t>(v)] = tag;
}

// One signature-pooling round. Signature of a vertex: its color followed by
// the sorted colors of its neighbors. Both sides are ranked against the
// pooled signature list so equal signatures get equal new colors; returns
// false when the per-color counts of the two sides diverge (no compatible
// automorphism exists below this node).
bool refine_round(const Graph& g, Coloring& c, bool& changed) {
    const int n = g.order();
    std::vector<std::vector<int>> sig_src(static_cast<std::size_t>(n)), sig_dst(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> s{c.src[static_cast<std::size_t>(v)]};
        std::vector<int> d{c.dst[static_cast<std::size_t>(v)]};
        for (std::uint64_t m = g.neighbors(v); m != 0; m &= m - 1) {
            const int u = std::countr_zero(m);
            s.push_back(c.src[static_cast<std::size_t>(u)]);
            d.push_back(c.dst[static_cast<std::size_t>(u)]);
        }
        std::sort(s.begin() + 1, s.end());
        std::sort(d.begin() + 1, d.end());
        sig_src[static_cast<std::size_t>(v)] = std::move(s);
        sig_dst[static_cast<std::size_t>(v)] = std::move(d);
    }
    std::vector<std::vector<int>> pool;
    pool.reserve(2 * static_cast<std::size_t>(n));
    pool.insert(pool.end(), sig_src.begin(), sig_src.end());
    pool.insert(pool.end(), sig_dst.begin(), sig_dst.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    auto rank = [&pool](const std::vector<int>& sig) {
        return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sig) - pool.begin());
    };
    std::vector<int> new_src(static_cast<std::size_t>(n)), new_dst(static_cast<std::size_t>(n));
    std::vector<int> count_src(pool.size(), 0), count_dst(pool.size(), 0);
    for (int v = 0; v < n; ++v) {
        new_src[static_cast<std::size_t>(v)] = rank(sig_src[static_cast<std::size_t>(v)]);
        new_dst[static_cast<std::size_t>(v)] = rank(sig_dst[static_cast<std::size_t>(v)]);
        ++count_src[static_cast<std::size_t>(new_src[static_cast<std::size_t>(v)])];
        ++count_dst[static_cast<std::size_t>(new_dst[static_cast<std::size_t>(v)])];
    }
    if (count_src != count_dst) return false;
    changed = new_src != c.src || new_dst != c.dst;
    c.src = std::move(new_src);
    c.dst = std::move(new_dst);
    return true;
}

bool refine(const Graph& g, Coloring& c) {
    bool changed = true;
    while (changed)
        if (!refine_round(g, c, changed)) return false;
    return true;
}

// Discrete-partition leaf: read off the forced bijection and verify it
// preserves adjacency exactly (color refinement alone is not a complete
// isomorphism invariant).
std::optional<Permutation> extract(const Graph& g, const Coloring& c) {
    const int n = g.order();
    std::vector<int> by_color(static_cast<std::size_t>(2) * n, -1);
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int col = c.dst[static_cast<std::size_t>(v)];
        if (col < 2 * n) by_color[static_cast<std::size_t>(col)] = v;
    }
    for (int v = 0; v < n; ++v) {
        const int col = c.src[static_cast<std::size_t>(v)];
        if (col >= 2 * n || by_color[static_cast<std::size_t>(col)] < 0) return std::nullopt;
        img[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(col)];
    }
    for (int u = 0; u < n; ++u) {
        std::uint64_t mapped = 0;
        for (std::uint64_t m = g.neighbors(u); m != 0; m &= m - 1)
            mapped |= std::uint64_t{1} << img[static_cast<std::size_t>(std::countr_zero(m))];
        if (mapped != g.neighbors(img[static_cast<std::size_t>(u)])) return std::nullopt;
    }
    return Permutation(std::move(img));
}

std::optional<Permutation> search(const Graph& g, Coloring c) {
    if (!refine(g, c)) return std::nullopt;
    const int n = g.order();

    // Smallest color class with at least two source vertices; its smallest
    // source vertex is the branch point.
    int cell_color = -1;
    int u = -1;
    {
        std::vector<int> count(static_cast<std::size_t>(2) * n, 0);
        for (int v = 0; v < n; ++v) ++count[static_cast<std::size_t>(c.src[static_cast<std::size_t>(v)])];
        for (int col = 0; col < 2 * n; ++col) {
            if (count[static_cast<std::size_t>(col)] >= 2) {
                cell_color = col;
                break;
            }
        }
        if (cell_color >= 0)
            for (int v = 0; v < n; ++v)
                if (c.src[static_cast<std::size_t>(v)] == cell_color) {
                    u = v;
                    break;
                }
    }
    if (cell_color < 0) return extract(g, c);

    for (int v = 0; v < n; ++v) {
        if (c.dst[static_cast<std::size_t>(v)] != cell_color) continue;
        Coloring next = c;
        individualize(next, u, v);
        if (auto found = search(g, std::move(next))) return found;
    }
    return std::nullopt;
}

}  // namespace

std::vector<int> OrbitPartition::singletons() const {
    std::vector<int> out;
    for (const auto& block : blocks)
        if (block.size() == 1) out.push_back(block.front());
    std::sort(out.begin(), out.end());
    return out;
}

AutGroup AutGroup::of_graph(const Graph& g, const AutOptions& opt) {
    return build(g, {}, opt.search_cap);
}

AutGroup AutGroup::build(const Graph& g, std::vector<int> prefix, int search_cap) {
    const int n = g.order();
    if (n > search_cap) throw CapError("graph order above the automorphism search cap");
    std::sort(prefix.begin(), prefix.end());
    prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
    for (int v : prefix) g.check_vertex(v);

    AutGroup a;
    a.graph_ = g;
    a.prefix_ = prefix;
    a.n_ = n;
    a.search_cap_ = search_cap;

    std::vector<bool> in_prefix(static_cast<std::size_t>(n), false);
    for (int v : prefix) in_prefix[static_cast<std::size_t>(v)] = true;
    std::vector<int> base = prefix;
    for (int v = 0; v < n; ++v)
        if (!in_prefix[static_cast<std::size_t>(v)]) base.push_back(v);

    Coloring persist;
    persist.src.assign(static_cast<std::size_t>(n), 0);
    persist.dst.assign(static_cast<std::size_t>(n), 0);
    refine(g, persist);
    for (int s : prefix) {
        individualize(persist, s, s);
        refine(g, persist);
    }

    a.order_ = 1;
    for (std::size_t l = prefix.size(); l < base.size(); ++l) {
        const int b = base[l];
        std::vector<std::pair<int, Permutation>> found;
        found.emplace_back(b, Permutation::identity(n));
        const int b_color = persist.src[static_cast<std::size_t>(b)];
        for (int w = 0; w < n; ++w) {
            if (w == b || persist.dst[static_cast<std::size_t>(w)] != b_color) continue;
            Coloring c = persist;
            individualize(c, b, w);
            if (auto sigma = search(g, std::move(c))) found.emplace_back(w, std::move(*sigma));
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Level lv;
        lv.point = b;
        for (auto& [w, rep] : found) {
            lv.orbit.push_back(w);
            lv.reps.push_back(std::move(rep));
        }
        if (__builtin_mul_overflow(a.order_, static_cast<std::uint64_t>(lv.orbit.size()), &a.order_))
            throw CapError("automorphism group order exceeds the 64-bit range");
        a.levels_.push_back(std::move(lv));
        individualize(persist, b, b);
        refine(g, persist);
    }

    for (const Level& lv : a.levels_)
        for (const Permutation& rep : lv.reps)
            if (!rep.is_identity()) a.strong_gens_.push_back(rep);
    return a;
}

OrbitPartition AutGroup::orbits() const {
    std::vector<int> root(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) root[static_cast<std::size_t>(v)] = v;
    auto find = [&root](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const Permutation& gen : strong_gens_) {
        for (int v = 0; v < n_; ++v) {
            const int a = find(v);
            const int b = find(gen.apply(v));
            if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    OrbitPartition p;
    p.block_of.assign(static_cast<std::size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
        const int r = find(v);
        if (p.block_of[static_cast<std::size_t>(r)] < 0) {
            p.block_of[static_cast<std::size_t>(r)] = static_cast<int>(p.blocks.size());
            p.blocks.push_back({});
        }
        p.block_of[static_cast<std::size_t>(v)] = p.block_of[static_cast<std::size_t>(r)];
        p.blocks[static_cast<std::size_t>(p.block_of[static_cast<std::size_t>(v)])].push_back(v);
    }
    return p;
}

std::vector<int> AutGroup::orbit_of(int v) const {
    graph_.check_vertex(v);
    std::uint64_t seen = std::uint64_t{1} << v;
    std::vector<int> queue{v};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const Permutation& gen : strong_gens_) {
            const int w = gen.apply(queue[i]);
            if (!(seen >> w & 1)) {
                seen |= std::uint64_t{1} << w;
                queue.push_back(w);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

AutGroup AutGroup::pointwise_stabilizer(const std::vector<int>& s) const {
    std::vector<int> prefix = prefix_;
    prefix.insert(prefix.end(), s.begin(), s.end());
    return build(graph_, std::move(prefix), search_cap_);
}

void AutGroup::walk(std::size_t level, const Permutation& acc,
                    const std::function<void(const Permutation&)>& fn) const {
    if (level == levels_.size()) {
        fn(acc);
        return;
    }
    const Level& lv = levels_[level];
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        if (lv.reps[i].is_identity())
            walk(level + 1, acc, fn);
        else
            walk(level + 1, acc.compose(lv.reps[i]), fn);
    }
}

void AutGroup::for_each_element(const std::function<void(const Permutation&)>& fn,
                                std::uint64_t cap) const {
    if (order_ > cap) throw CapError("group element enumeration cap exceeded");
    walk(0, Permutation::identity(n_), fn);
}

std::vector<Permutation> AutGroup::elements(std::uint64_t cap) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(order_));
    for_each_element([&out](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

bool AutGroup::contains(const Permutation& p) const {
    if (p.size() != n_) return false;
    Permutation residue = p;
    for (const Level& lv : levels_) {
        const int w = residue.apply(lv.point);
        const auto it = std::lower_bound(lv.orbit.begin(), lv.orbit.end(), w);
        if (it == lv.orbit.end() || *it != w) return false;
        const std::size_t i = static_cast<std::size_t>(it - lv.orbit.begin());
        residue = lv.reps[i].inverse().compose(residue);
    }
    return residue.is_identity();
}

}  // namespace symfix
