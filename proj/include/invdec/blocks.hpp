#pragma once

#include "invdec/inversion_set.hpp"

#include <compare>

namespace invdec {

// {lo, lo+1, ..., hi}, 1-based, nonempty.
struct Interval {
    int lo = 1;
    int hi = 1;

    int length() const { return hi - lo + 1; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    // intersecting but neither nested
    bool overlaps(const Interval& o) const {
        return lo <= o.hi && o.lo <= hi && !contains(o) && !o.contains(*this);
    }

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Interval& I) {
    return os << '[' << I.lo << ',' << I.hi << ']';
}

enum class BlockKind { Parallel, Serial, Prime };

inline const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Parallel: return "parallel";
        case BlockKind::Serial: return "serial";
        case BlockKind::Prime: return "prime";
    }
    return "?";
}

inline void check_interval(const Interval& I, int n) {
    if (I.lo < 1 || I.hi > n || I.lo > I.hi)
        throw std::invalid_argument("interval out of range");
}

// A block (common interval): positions I whose image p(I) is an interval.
inline bool is_block(const Permutation& p, const Interval& I) {
    check_interval(I, p.size());
    int mn = p(I.lo), mx = p(I.lo);
    for (int i = I.lo + 1; i <= I.hi; ++i) {
        mn = std::min(mn, p(i));
        mx = std::max(mx, p(i));
    }
    return mx - mn == I.length() - 1;
}

// All blocks, sorted by (lo, hi). Naive running min/max scan; adequate at
// the sizes this library targets.
inline std::vector<Interval> all_blocks(const Permutation& p) {
    const int n = p.size();
    std::vector<Interval> out;
    for (int lo = 1; lo <= n; ++lo) {
        int mn = p(lo), mx = p(lo);
        for (int hi = lo; hi <= n; ++hi) {
            mn = std::min(mn, p(hi));
            mx = std::max(mx, p(hi));
            if (mx - mn == hi - lo) out.push_back({lo, hi});
        }
    }
    return out;
}

// Blocks overlapped by no other block. Always contains the singletons and [1,n].
inline std::vector<Interval> strong_blocks(const Permutation& p) {
    auto blocks = all_blocks(p);
    std::vector<Interval> out;
    for (const auto& B : blocks) {
        bool strong = true;
        for (const auto& C : blocks)
            if (B.overlaps(C)) {
                strong = false;
                break;
            }
        if (strong) out.push_back(B);
    }
    return out;
}

// The pattern of a sequence of distinct values: value -> rank.
inline Permutation pattern_of(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> w(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        w[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                                sorted.begin()) + 1;
    return Permutation(std::move(w));
}

namespace detail {

// Maximal proper sub-blocks of I that no block inside I overlaps. For a
// block I these partition it; empty for singletons. `blocks` is the
// precomputed global block list.
inline std::vector<Interval> children_partition(const std::vector<Interval>& blocks,
                                                const Interval& I) {
    std::vector<Interval> inside;
    for (const auto& B : blocks)
        if (I.contains(B) && B != I) inside.push_back(B);
    std::vector<Interval> strong;
    for (const auto& B : inside) {
        bool ok = true;
        for (const auto& C : inside)
            if (B.overlaps(C)) {
                ok = false;
                break;
            }
        if (ok) strong.push_back(B);
    }
    std::vector<Interval> out;
    for (const auto& B : strong) {
        bool maximal = true;
        for (const auto& C : strong)
            if (C != B && C.contains(B)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(B);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Permutation children_skeleton(const Permutation& p, const std::vector<Interval>& children) {
    std::vector<int> mins;
    mins.reserve(children.size());
    for (const auto& C : children) {
        int mn = p(C.lo);
        for (int i = C.lo + 1; i <= C.hi; ++i) mn = std::min(mn, p(i));
        mins.push_back(mn);
    }
    return pattern_of(mins);
}

inline BlockKind kind_of_skeleton(const Permutation& skel) {
    if (skel.is_identity()) return BlockKind::Parallel;
    if (skel == Permutation::reverse_identity(skel.size())) return BlockKind::Serial;
    return BlockKind::Prime;
}

}  // namespace detail

// The children partition of a block, exposed for inspection.
inline std::vector<Interval> block_children(const Permutation& p, const Interval& I) {
    if (!is_block(p, I)) throw std::invalid_argument("block_children: not a block");
    return detail::children_partition(all_blocks(p), I);
}

// Parallel if the children images increase, Serial if they decrease,
// Prime otherwise. Requires a block with at least two elements.
inline BlockKind classify_block(const Permutation& p, const Interval& I) {
    if (!is_block(p, I)) throw std::invalid_argument("classify_block: not a block");
    if (I.length() < 2) throw std::invalid_argument("classify_block: singleton block has no kind");
    auto children = detail::children_partition(all_blocks(p), I);
    return detail::kind_of_skeleton(detail::children_skeleton(p, children));
}

// No blocks besides [1,n] and the singletons. By the letter of the
// definition 1, 12 and 21 are simple, although skeletons of size 2 are
// always classified parallel or serial, never prime.
inline bool is_simple(const Permutation& p) {
    if (p.size() == 1) return true;
    return static_cast<int>(all_blocks(p).size()) == p.size() + 1;
}

// Recursive decomposition of a permutation into nested strong blocks.
// Leaves are singletons of kind Parallel with the one-letter skeleton.
// Internal nodes carry a skeleton whose size equals the child count:
// an identity (Parallel), a reverse identity (Serial), or a simple
// permutation of size >= 4 (Prime).
struct SubstitutionTree {
    Interval interval;
    BlockKind kind;
    Permutation skeleton;
    std::vector<SubstitutionTree> children;

    bool is_leaf() const { return children.empty(); }
};

namespace detail {

inline SubstitutionTree build_tree(const Permutation& p, const std::vector<Interval>& blocks,
                                   const Interval& I) {
    if (I.length() == 1)
        return SubstitutionTree{I, BlockKind::Parallel, Permutation::identity(1), {}};
    auto child_ivs = children_partition(blocks, I);
    auto skel = children_skeleton(p, child_ivs);
    auto kind = kind_of_skeleton(skel);
    std::vector<SubstitutionTree> children;
    children.reserve(child_ivs.size());
    for (const auto& C : child_ivs) children.push_back(build_tree(p, blocks, C));
    return SubstitutionTree{I, kind, std::move(skel), std::move(children)};
}

}  // namespace detail

inline SubstitutionTree substitution_tree(const Permutation& p) {
    return detail::build_tree(p, all_blocks(p), Interval{1, p.size()});
}

// skeleton[parts]: replace entry i of the skeleton by a block patterned
// after parts[i]; blocks are value-ordered by the skeleton.
inline Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& parts) {
    const int m = skeleton.size();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("inflate: arity mismatch");
    std::vector<int> offset(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (skeleton(j + 1) < skeleton(i + 1)) offset[i] += parts[j].size();
    std::vector<int> w;
    for (int i = 0; i < m; ++i)
        for (int v : parts[i].word()) w.push_back(offset[i] + v);
    return Permutation(std::move(w));
}

inline Permutation tree_to_permutation(const SubstitutionTree& t) {
    if (t.is_leaf()) {
        if (t.skeleton.size() != 1)
            throw std::invalid_argument("tree_to_permutation: malformed leaf");
        return Permutation::identity(1);
    }
    if (static_cast<int>(t.children.size()) != t.skeleton.size())
        throw std::invalid_argument("tree_to_permutation: skeleton size != child count");
    std::vector<Permutation> parts;
    parts.reserve(t.children.size());
    for (const auto& c : t.children) parts.push_back(tree_to_permutation(c));
    return inflate(t.skeleton, parts);
}

}  // namespace invdec
