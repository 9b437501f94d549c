#pragma once

#include "invdec/permutation.hpp"

#include <utility>

namespace invdec {

// An unordered pair {i,j}, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("edge: endpoints must differ");
    return i < j ? Edge{i, j} : Edge{j, i};
}

// Set of inversions over an ambient [n]. The ambient size is part of the
// value: the empty set on [3] and on [4] are distinct. Edges are kept
// sorted and unique. `validated` marks sets known to satisfy the
// transitivity criterion (see is_inversion_set).
struct InversionSet {
    int n = 0;
    std::vector<Edge> edges;
    bool validated = false;

    int size() const { return static_cast<int>(edges.size()); }
    bool contains(const Edge& e) const {
        return std::binary_search(edges.begin(), edges.end(), e);
    }

    friend bool operator==(const InversionSet& a, const InversionSet& b) {
        return a.n == b.n && a.edges == b.edges;
    }
};

// Normalizing factory: orders endpoints, sorts, drops duplicates.
inline InversionSet make_inversion_set(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("inversion set: ambient size must be positive");
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first < 1 || e.second > n)
            throw std::invalid_argument("inversion set: pair out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return InversionSet{n, std::move(edges), false};
}

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
    return out;
}

inline InversionSet inversion_set(const Permutation& p) {
    std::vector<Edge> edges;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j)) edges.push_back({i, j});
    return InversionSet{p.size(), std::move(edges), true};
}

// True iff some permutation realizes T. Checks, for all i < j < k:
//   ij, jk in T  =>  ik in T
//   ik in T      =>  ij in T or jk in T
inline bool is_inversion_set(const InversionSet& T) {
    const int n = T.n;
    std::vector<char> in(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [i, j] : T.edges) in[(i - 1) * n + (j - 1)] = 1;
    auto has = [&](int i, int j) { return in[(i - 1) * n + (j - 1)] != 0; };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                if (has(i, j) && has(j, k) && !has(i, k)) return false;
                if (has(i, k) && !has(i, j) && !has(j, k)) return false;
            }
    return true;
}

namespace detail {

// Rank construction: p(i) = i + #{j>i : ij in T} - #{j<i : ji in T}.
// Returns the word without validating that it is a permutation.
inline std::vector<int> rank_word(const InversionSet& T) {
    std::vector<int> w(T.n);
    std::vector<int> later(T.n + 1, 0), earlier(T.n + 1, 0);
    for (const auto& [i, j] : T.edges) {
        ++later[i];
        ++earlier[j];
    }
    for (int i = 1; i <= T.n; ++i) w[i - 1] = i + later[i] - earlier[i];
    return w;
}

}  // namespace detail

// The unique permutation whose inversion set is T, if T is realizable.
inline Permutation permutation_from_inversion_set(const InversionSet& T) {
    auto w = detail::rank_word(T);
    std::vector<char> seen(T.n, 0);
    for (int v : w) {
        if (v < 1 || v > T.n || seen[v - 1])
            throw std::invalid_argument("permutation_from_inversion_set: not an inversion set");
        seen[v - 1] = 1;
    }
    Permutation p(std::move(w));
    if (inversion_set(p).edges != T.edges)
        throw std::invalid_argument("permutation_from_inversion_set: not an inversion set");
    return p;
}

// Non-throwing variant used by brute-force enumeration.
inline bool realizes_inversion_set(const InversionSet& T, Permutation* out = nullptr) {
    auto w = detail::rank_word(T);
    std::vector<char> seen(T.n, 0);
    for (int v : w) {
        if (v < 1 || v > T.n || seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    Permutation p(std::move(w));
    if (inversion_set(p).edges != T.edges) return false;
    if (out) *out = std::move(p);
    return true;
}

// {{s(i), s(j)} : {i,j} in T}. The image need not be an inversion set.
inline std::vector<Edge> apply_map(const InversionSet& T, const Permutation& s) {
    if (T.n != s.size()) throw std::invalid_argument("apply_map: size mismatch");
    std::vector<Edge> out;
    out.reserve(T.edges.size());
    for (const auto& [i, j] : T.edges) out.push_back(make_edge(s(i), s(j)));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- set algebra on sorted edge vectors ----

inline std::vector<Edge> edge_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Edge> edge_difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Edge> edge_symmetric_difference(const std::vector<Edge>& a,
                                                   const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool edges_disjoint(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return false;
    }
    return true;
}

inline std::vector<Edge> complement_edges(const InversionSet& T) {
    return edge_difference(all_pairs(T.n), T.edges);
}

}  // namespace invdec
