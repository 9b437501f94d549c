#pragma once

#include "invdec/blocks.hpp"

#include <optional>

namespace invdec {

// Simple undirected graph on vertices [n].
class Graph {
public:
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
        for (auto& e : edges) {
            e = make_edge(e.first, e.second);
            if (e.first < 1 || e.second > n)
                throw std::invalid_argument("graph: edge out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n) * n, 0);
        for (const auto& [i, j] : edges_) {
            adj_[(i - 1) * n + (j - 1)] = 1;
            adj_[(j - 1) * n + (i - 1)] = 1;
        }
    }

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int i, int j) const { return i != j && adj_[(i - 1) * n_ + (j - 1)] != 0; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<char> adj_;
};

inline Graph inversion_graph(const Permutation& p) {
    auto T = inversion_set(p);
    return Graph(T.n, std::move(T.edges));
}

// Definitional check: no outside vertex distinguishes two members.
inline bool is_module(const Graph& g, const std::vector<int>& members) {
    if (members.empty()) throw std::invalid_argument("is_module: empty vertex set");
    std::vector<char> in(g.size() + 1, 0);
    for (int v : members) {
        if (v < 1 || v > g.size()) throw std::invalid_argument("is_module: vertex out of range");
        if (in[v]) throw std::invalid_argument("is_module: duplicate vertex");
        in[v] = 1;
    }
    for (int v = 1; v <= g.size(); ++v) {
        if (in[v]) continue;
        bool first = g.adjacent(v, members.front());
        for (int m : members)
            if (g.adjacent(v, m) != first) return false;
    }
    return true;
}

// Components sorted by smallest member, members ascending.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.size() + 1, 0);
    int next = 0;
    for (int s = 1; s <= g.size(); ++s) {
        if (comp[s]) continue;
        comp[s] = ++next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 1; u <= g.size(); ++u)
                if (!comp[u] && g.adjacent(v, u)) {
                    comp[u] = next;
                    stack.push_back(u);
                }
        }
    }
    std::vector<std::vector<int>> out(next);
    for (int v = 1; v <= g.size(); ++v) out[comp[v] - 1].push_back(v);
    return out;
}

// The strong modules of an inversion graph are exactly the intervals in
// the substitution tree of the permutation, so they are read off the tree
// (the subset-enumeration oracle provides the independent check).
inline std::vector<Interval> strong_modules(const Permutation& p) {
    std::vector<Interval> out;
    auto walk = [&](auto&& self, const SubstitutionTree& t) -> void {
        out.push_back(t.interval);
        for (const auto& c : t.children) self(self, c);
    };
    walk(walk, substitution_tree(p));
    std::sort(out.begin(), out.end());
    return out;
}

struct EdgeClassOrigin {
    enum class Kind { SerialPair, PrimeExternal };
    Kind kind;
    Interval module;
    // 1-based child indices within the serial module; unused for PrimeExternal
    int child_i = 0;
    int child_j = 0;
};

struct EdgeClass {
    std::vector<Edge> edges;  // sorted
    std::optional<EdgeClassOrigin> origin;
};

// Disjoint nonempty classes covering every edge, sorted by smallest edge.
struct EdgeClassPartition {
    int n = 0;
    std::vector<EdgeClass> classes;
};

inline bool same_edge_partition(const EdgeClassPartition& a, const EdgeClassPartition& b) {
    if (a.n != b.n || a.classes.size() != b.classes.size()) return false;
    for (std::size_t k = 0; k < a.classes.size(); ++k)
        if (a.classes[k].edges != b.classes[k].edges) return false;
    return true;
}

namespace detail {

inline void sort_classes(EdgeClassPartition& part) {
    for (auto& c : part.classes) std::sort(c.edges.begin(), c.edges.end());
    std::sort(part.classes.begin(), part.classes.end(),
              [](const EdgeClass& x, const EdgeClass& y) { return x.edges.front() < y.edges.front(); });
}

inline void append_cross_edges(std::vector<Edge>& out, const Interval& A, const Interval& B) {
    for (int i = A.lo; i <= A.hi; ++i)
        for (int j = B.lo; j <= B.hi; ++j) out.push_back({i, j});
}

}  // namespace detail

// Classes read off the substitution tree: one class per child pair of a
// serial node (a complete bipartite bundle), one class per prime node
// (all of its external edges).
inline EdgeClassPartition edge_classes_structural(const Permutation& p) {
    EdgeClassPartition part{p.size(), {}};
    auto walk = [&](auto&& self, const SubstitutionTree& t) -> void {
        if (!t.is_leaf()) {
            const auto& ch = t.children;
            if (t.kind == BlockKind::Serial) {
                for (std::size_t a = 0; a < ch.size(); ++a)
                    for (std::size_t b = a + 1; b < ch.size(); ++b) {
                        EdgeClass cls;
                        detail::append_cross_edges(cls.edges, ch[a].interval, ch[b].interval);
                        cls.origin = EdgeClassOrigin{EdgeClassOrigin::Kind::SerialPair, t.interval,
                                                     static_cast<int>(a) + 1, static_cast<int>(b) + 1};
                        part.classes.push_back(std::move(cls));
                    }
            } else if (t.kind == BlockKind::Prime) {
                EdgeClass cls;
                for (std::size_t a = 0; a < ch.size(); ++a)
                    for (std::size_t b = a + 1; b < ch.size(); ++b)
                        if (t.skeleton(static_cast<int>(a) + 1) > t.skeleton(static_cast<int>(b) + 1))
                            detail::append_cross_edges(cls.edges, ch[a].interval, ch[b].interval);
                cls.origin = EdgeClassOrigin{EdgeClassOrigin::Kind::PrimeExternal, t.interval, 0, 0};
                part.classes.push_back(std::move(cls));
            }
            for (const auto& c : ch) self(self, c);
        }
    };
    walk(walk, substitution_tree(p));
    detail::sort_classes(part);
    return part;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[a] = b;
    }

private:
    std::vector<int> parent_;
};

// Transitive closure of the relation joining two edges ij, ik whenever
// jk is not an edge. Meaningful on permutation graphs; origins are unset.
inline EdgeClassPartition edge_classes_closure(const Graph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<int>> nbr(g.size() + 1);
    for (int k = 0; k < m; ++k) {
        nbr[edges[k].first].push_back(k);
        nbr[edges[k].second].push_back(k);
    }
    UnionFind uf(m);
    for (int v = 1; v <= g.size(); ++v) {
        const auto& inc = nbr[v];
        for (std::size_t x = 0; x < inc.size(); ++x)
            for (std::size_t y = x + 1; y < inc.size(); ++y) {
                const auto& e = edges[inc[x]];
                const auto& f = edges[inc[y]];
                int j = e.first == v ? e.second : e.first;
                int k = f.first == v ? f.second : f.first;
                if (!g.adjacent(j, k)) uf.unite(inc[x], inc[y]);
            }
    }
    std::vector<std::vector<Edge>> groups(m);
    for (int k = 0; k < m; ++k) groups[uf.find(k)].push_back(edges[k]);
    EdgeClassPartition part{g.size(), {}};
    for (auto& grp : groups)
        if (!grp.empty()) part.classes.push_back(EdgeClass{std::move(grp), std::nullopt});
    detail::sort_classes(part);
    return part;
}

}  // namespace invdec
