#pragma once

#include "invdec/inv_graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace invdec {

// One way of splitting the inversions of a permutation: for every prime
// strong module, the side receiving its external edges; for every serial
// strong module with p children, a permutation of size p whose inversions
// pick the child pairs sent to the first side.
struct DecompositionChoice {
    std::map<Interval, int> prime_side;            // values in {1,2}
    std::map<Interval, Permutation> serial_perm;
};

// Unordered pair (tau1, tau2), both non-identity, whose inversion sets
// partition the inversions of the owning permutation. Canonical order:
// tau1 is the part containing the owner's lexicographically smallest
// inversion. The generating choice is kept as provenance when known and
// is not part of the value's identity.
struct InvDecomposition {
    Permutation tau1;
    Permutation tau2;
    std::optional<DecompositionChoice> provenance;

    friend bool operator==(const InvDecomposition& a, const InvDecomposition& b) {
        return a.tau1 == b.tau1 && a.tau2 == b.tau2;
    }
    friend bool operator<(const InvDecomposition& a, const InvDecomposition& b) {
        if (a.tau1 != b.tau1) return a.tau1 < b.tau1;
        return a.tau2 < b.tau2;
    }
};

namespace detail {

struct DecisionNode {
    Interval module;
    BlockKind kind;  // Serial or Prime
    Permutation skeleton;
    std::vector<Interval> children;
    // edge bundles: for Serial, one per child pair (a<b, 0-based);
    // for Prime, a single bundle of all external edges
    std::vector<std::vector<Edge>> bundles;
};

inline void collect_decision_nodes(const SubstitutionTree& t, std::vector<DecisionNode>& out) {
    if (!t.is_leaf() && t.kind != BlockKind::Parallel) {
        DecisionNode node{t.interval, t.kind, t.skeleton, {}, {}};
        for (const auto& c : t.children) node.children.push_back(c.interval);
        const auto& ch = node.children;
        if (t.kind == BlockKind::Serial) {
            for (std::size_t a = 0; a < ch.size(); ++a)
                for (std::size_t b = a + 1; b < ch.size(); ++b) {
                    std::vector<Edge> bundle;
                    append_cross_edges(bundle, ch[a], ch[b]);
                    node.bundles.push_back(std::move(bundle));
                }
        } else {
            std::vector<Edge> bundle;
            for (std::size_t a = 0; a < ch.size(); ++a)
                for (std::size_t b = a + 1; b < ch.size(); ++b)
                    if (t.skeleton(static_cast<int>(a) + 1) > t.skeleton(static_cast<int>(b) + 1))
                        append_cross_edges(bundle, ch[a], ch[b]);
            node.bundles.push_back(std::move(bundle));
        }
        out.push_back(std::move(node));
    }
    for (const auto& c : t.children) collect_decision_nodes(c, out);
}

inline std::vector<DecisionNode> decision_nodes(const Permutation& p) {
    std::vector<DecisionNode> out;
    collect_decision_nodes(substitution_tree(p), out);
    return out;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a)
        throw std::overflow_error("decomposition count overflows 64 bits");
    return a * b;
}

inline std::uint64_t factorial_checked(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = mul_checked(f, static_cast<std::uint64_t>(i));
    return f;
}

}  // namespace detail

// 2^m * prod_i (i!)^{k_i} / 2 - 1, where m counts prime strong modules and
// k_i counts serial strong modules with i children. Zero for the identity,
// whose tree has no decision nodes.
inline std::uint64_t count_decompositions(const Permutation& p) {
    auto nodes = detail::decision_nodes(p);
    if (nodes.empty()) return 0;
    std::uint64_t total = 1;
    for (const auto& node : nodes) {
        if (node.kind == BlockKind::Prime)
            total = detail::mul_checked(total, 2);
        else
            total = detail::mul_checked(
                total, detail::factorial_checked(static_cast<int>(node.children.size())));
    }
    return total / 2 - 1;
}

// At least two edge classes.
inline bool is_decomposable(const Permutation& p) {
    return edge_classes_structural(p).classes.size() >= 2;
}

namespace detail {

// Iterates every admissible choice in a fixed order: decision nodes in
// tree preorder, the first node varying slowest; prime sides 1 then 2;
// serial permutations in lexicographic one-line order. Each unordered
// decomposition arises from exactly two choices (the global flip), so
// pairs are deduplicated on first sight. The visitor returns false to stop.
inline void for_each_decomposition_impl(
    const Permutation& p, const std::vector<DecisionNode>& nodes,
    const std::function<bool(const InvDecomposition&)>& visit) {
    if (nodes.empty()) return;
    const auto T = inversion_set(p);

    // current option per node: prime -> side, serial -> sigma
    std::vector<int> side(nodes.size(), 1);
    std::vector<Permutation> sigma;
    sigma.reserve(nodes.size());
    for (const auto& node : nodes)
        sigma.push_back(Permutation::identity(static_cast<int>(node.children.size())));

    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;

    auto emit = [&]() -> bool {
        std::vector<Edge> first;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto& node = nodes[k];
            if (node.kind == BlockKind::Prime) {
                if (side[k] == 1)
                    first.insert(first.end(), node.bundles[0].begin(), node.bundles[0].end());
            } else {
                const auto& s = sigma[k];
                std::size_t pair_idx = 0;
                const int l = static_cast<int>(node.children.size());
                for (int a = 1; a <= l; ++a)
                    for (int b = a + 1; b <= l; ++b, ++pair_idx)
                        if (s(a) > s(b))
                            first.insert(first.end(), node.bundles[pair_idx].begin(),
                                         node.bundles[pair_idx].end());
            }
        }
        if (first.empty() || first.size() == T.edges.size()) return true;  // trivial corner
        std::sort(first.begin(), first.end());
        auto second = edge_difference(T.edges, first);

        auto t1 = permutation_from_inversion_set(InversionSet{T.n, std::move(first), true});
        auto t2 = permutation_from_inversion_set(InversionSet{T.n, std::move(second), true});
        // canonical order: the part holding the smallest inversion of p first
        if (!inversion_set(t1).contains(T.edges.front())) std::swap(t1, t2);

        auto key = std::make_pair(t1.word(), t2.word());
        if (!seen.insert(key).second) return true;

        DecompositionChoice choice;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (nodes[k].kind == BlockKind::Prime)
                choice.prime_side.emplace(nodes[k].module, side[k]);
            else
                choice.serial_perm.emplace(nodes[k].module, sigma[k]);
        }
        return visit(InvDecomposition{std::move(t1), std::move(t2), std::move(choice)});
    };

    // odometer: advance the last node fastest
    auto advance = [&](std::size_t k) -> bool {
        if (nodes[k].kind == BlockKind::Prime) {
            if (side[k] == 1) {
                side[k] = 2;
                return true;
            }
            side[k] = 1;
            return false;
        }
        auto w = sigma[k].word();
        if (std::next_permutation(w.begin(), w.end())) {
            sigma[k] = Permutation(std::move(w));
            return true;
        }
        sigma[k] = Permutation::identity(static_cast<int>(nodes[k].children.size()));
        return false;
    };

    for (;;) {
        if (!emit()) return;
        std::size_t k = nodes.size();
        while (k > 0 && !advance(k - 1)) --k;
        if (k == 0) return;
    }
}

}  // namespace detail

// Visits every nontrivial decomposition once, in a deterministic order.
inline void for_each_decomposition(const Permutation& p,
                                   const std::function<bool(const InvDecomposition&)>& visit) {
    detail::for_each_decomposition_impl(p, detail::decision_nodes(p), visit);
}

inline std::vector<InvDecomposition> enumerate_decompositions(
    const Permutation& p, std::optional<std::size_t> limit = std::nullopt) {
    std::vector<InvDecomposition> out;
    if (limit && *limit == 0) return out;
    for_each_decomposition(p, [&](const InvDecomposition& d) {
        out.push_back(d);
        return !limit || out.size() < *limit;
    });
    return out;
}

// Builds the pair by rewriting two copies of the substitution tree: a
// prime skeleton survives on its chosen side and becomes an identity on
// the other; a serial skeleton becomes sigma on side 1 and its value
// complement on side 2.
inline InvDecomposition decomposition_by_inflation(const Permutation& p,
                                                   const DecompositionChoice& choice) {
    auto nodes = detail::decision_nodes(p);
    if (choice.prime_side.size() + choice.serial_perm.size() != nodes.size())
        throw std::invalid_argument("decomposition choice: wrong number of assignments");
    for (const auto& node : nodes) {
        if (node.kind == BlockKind::Prime) {
            auto it = choice.prime_side.find(node.module);
            if (it == choice.prime_side.end())
                throw std::invalid_argument("decomposition choice: missing prime module");
            if (it->second != 1 && it->second != 2)
                throw std::invalid_argument("decomposition choice: side must be 1 or 2");
        } else {
            auto it = choice.serial_perm.find(node.module);
            if (it == choice.serial_perm.end())
                throw std::invalid_argument("decomposition choice: missing serial module");
            if (it->second.size() != static_cast<int>(node.children.size()))
                throw std::invalid_argument("decomposition choice: arity mismatch");
        }
    }

    auto rebuild = [&](auto&& self, const SubstitutionTree& t, int tau) -> Permutation {
        if (t.is_leaf()) return Permutation::identity(1);
        std::vector<Permutation> parts;
        parts.reserve(t.children.size());
        for (const auto& c : t.children) parts.push_back(self(self, c, tau));
        const int l = static_cast<int>(t.children.size());
        Permutation skel = t.skeleton;
        if (t.kind == BlockKind::Prime) {
            int s = choice.prime_side.at(t.interval);
            if (s != tau) skel = Permutation::identity(l);
        } else if (t.kind == BlockKind::Serial) {
            const auto& s = choice.serial_perm.at(t.interval);
            skel = tau == 1 ? s : compose(Permutation::reverse_identity(l), s);
        }
        return inflate(skel, parts);
    };

    auto tree = substitution_tree(p);
    auto t1 = rebuild(rebuild, tree, 1);
    auto t2 = rebuild(rebuild, tree, 2);
    if (t1.is_identity() || t2.is_identity())
        throw std::invalid_argument("decomposition choice: a part is the identity");
    auto T = inversion_set(p);
    if (!inversion_set(t1).contains(T.edges.front())) std::swap(t1, t2);
    return InvDecomposition{std::move(t1), std::move(t2), choice};
}

// True iff the parts' inversion sets are pairwise disjoint and cover T_p.
inline bool validate_partition(const Permutation& p, const std::vector<Permutation>& parts) {
    std::vector<Edge> pool;
    for (const auto& q : parts) {
        if (q.size() != p.size()) throw std::invalid_argument("validate_partition: size mismatch");
        auto T = inversion_set(q);
        pool.insert(pool.end(), T.edges.begin(), T.edges.end());
    }
    std::sort(pool.begin(), pool.end());
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) return false;
    return pool == inversion_set(p).edges;
}

// Requires that d actually decomposes p.
inline void validate_decomposition(const Permutation& p, const InvDecomposition& d) {
    if (d.tau1.is_identity() || d.tau2.is_identity())
        throw std::invalid_argument("decomposition: a part is the identity");
    if (!validate_partition(p, {d.tau1, d.tau2}))
        throw std::invalid_argument("decomposition: parts do not partition the inversions");
}

inline bool is_multiplicative(const Permutation& p, const InvDecomposition& d) {
    validate_decomposition(p, d);
    return compose(d.tau1, d.tau2) == p || compose(d.tau2, d.tau1) == p;
}

// A decomposition whose parts multiply to p (in one order or the other),
// when p is decomposable. The second part collects the edges induced on a
// chosen block: the preorder-earliest non-parallel strong block not
// containing every other one, or, when the only non-parallel block is a
// serial one with at least three children, the union of its first two.
inline std::optional<InvDecomposition> multiplicative_witness(const Permutation& p) {
    auto nodes = detail::decision_nodes(p);
    if (nodes.empty()) return std::nullopt;
    Interval chosen;
    if (nodes.size() == 1) {
        const auto& node = nodes.front();
        if (node.kind != BlockKind::Serial || node.children.size() < 3) return std::nullopt;
        chosen = Interval{node.children[0].lo, node.children[1].hi};
    } else {
        bool found = false;
        for (const auto& cand : nodes) {
            for (const auto& other : nodes)
                if (!cand.module.contains(other.module)) {
                    chosen = cand.module;
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) return std::nullopt;  // unreachable: some node is minimal
    }

    auto T = inversion_set(p);
    std::vector<Edge> inner;
    for (const auto& e : T.edges)
        if (chosen.contains(e.first) && chosen.contains(e.second)) inner.push_back(e);
    auto outer = edge_difference(T.edges, inner);
    auto t1 = permutation_from_inversion_set(InversionSet{T.n, std::move(outer), true});
    auto t2 = permutation_from_inversion_set(InversionSet{T.n, std::move(inner), true});
    if (!inversion_set(t1).contains(T.edges.front())) std::swap(t1, t2);
    InvDecomposition d{std::move(t1), std::move(t2), std::nullopt};
    if (compose(d.tau1, d.tau2) != p && compose(d.tau2, d.tau1) != p)
        throw std::logic_error("multiplicative_witness: construction failed");
    return d;
}

// 0/1 vector with entry (i,j) = 1 iff p(i) < p(j); a vertex of the linear
// ordering polytope.
struct LOPVertex {
    int n = 0;
    std::vector<int> entries;  // row-major n*n, diagonal zero

    int entry(int i, int j) const { return entries[(i - 1) * n + (j - 1)]; }

    friend bool operator==(const LOPVertex&, const LOPVertex&) = default;
};

inline LOPVertex vertex_vector(const Permutation& p) {
    const int n = p.size();
    LOPVertex v{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && p(i) < p(j)) v.entries[(i - 1) * n + (j - 1)] = 1;
    return v;
}

// A non-identity vertex is adjacent to the identity vertex exactly when
// the permutation is not decomposable.
inline bool is_neighbor_of_identity(const Permutation& p) {
    if (p.is_identity())
        throw std::invalid_argument("is_neighbor_of_identity: undefined for the identity");
    return !is_decomposable(p);
}

// The permutation whose inversion set is T[parts[i]] + T[parts[j]];
// guaranteed to exist when the parts partition T_p.
inline Permutation merge_parts(const Permutation& p, const std::vector<Permutation>& parts,
                               std::size_t i, std::size_t j) {
    if (i >= parts.size() || j >= parts.size() || i == j)
        throw std::invalid_argument("merge_parts: bad part indices");
    if (!validate_partition(p, parts))
        throw std::invalid_argument("merge_parts: parts do not partition the inversions");
    auto merged = edge_union(inversion_set(parts[i]).edges, inversion_set(parts[j]).edges);
    return permutation_from_inversion_set(InversionSet{p.size(), std::move(merged), false});
}

// Every permutation with at least this many inversions is decomposable
// (the guarantee holds for n >= 5; small n admit counterexamples).
inline long long min_inversions_guarantee(int n) {
    if (n < 1) throw std::invalid_argument("min_inversions_guarantee: size must be positive");
    return static_cast<long long>(n) * (n - 1) / 2 - n + 2;
}

namespace detail {

inline std::vector<Edge> multiset_edges(const std::vector<Permutation>& ps, int n) {
    std::vector<Edge> out;
    for (const auto& q : ps) {
        if (q.size() != n) throw std::invalid_argument("binomial: size mismatch");
        auto T = inversion_set(q);
        out.insert(out.end(), T.edges.begin(), T.edges.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Multiset equality of the concatenated inversion sets of both sides.
inline bool binomial_holds(const std::vector<Permutation>& lhs,
                           const std::vector<Permutation>& rhs) {
    if (lhs.empty() || rhs.empty())
        throw std::invalid_argument("binomial: both sides must be nonempty");
    const int n = lhs.front().size();
    return detail::multiset_edges(lhs, n) == detail::multiset_edges(rhs, n);
}

// The smallest pair whose multiplicities differ between the two sides.
inline std::optional<Edge> binomial_mismatch(const std::vector<Permutation>& lhs,
                                             const std::vector<Permutation>& rhs) {
    if (lhs.empty() || rhs.empty())
        throw std::invalid_argument("binomial: both sides must be nonempty");
    const int n = lhs.front().size();
    auto a = detail::multiset_edges(lhs, n);
    auto b = detail::multiset_edges(rhs, n);
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
            ++x;
            ++y;
        } else {
            return a[x] < b[y] ? a[x] : b[y];
        }
    }
    if (x < a.size()) return a[x];
    if (y < b.size()) return b[y];
    return std::nullopt;
}

}  // namespace invdec
