#pragma once

#include "invdec/decomposition.hpp"

#include <cstdlib>
#include <thread>

namespace invdec::oracle {

// ---------------------------------------------------------------------
// Brute-force counterparts of the structural notions. These deliberately
// use exhaustion over subsets or words instead of the decomposition
// theory, so that sweeps can cross-check the fast paths.
// ---------------------------------------------------------------------

// Every split of T_p into two nonempty inversion sets, found by trying
// all 2^|T| subsets. The subset containing the smallest inversion is
// tried as tau1, which yields canonical order for free.
inline std::vector<InvDecomposition> brute_decompositions(const Permutation& p) {
    const auto T = inversion_set(p);
    const int m = T.size();
    if (m > 25) throw std::length_error("brute_decompositions: inversion-set budget exceeded");
    std::vector<InvDecomposition> out;
    if (m < 2) return out;
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t mask = 1; mask < full; mask += 2) {  // bit 0: smallest inversion
        std::vector<Edge> first, second;
        for (int k = 0; k < m; ++k)
            (mask >> k & 1 ? first : second).push_back(T.edges[k]);
        InversionSet T1{T.n, std::move(first), false};
        if (!is_inversion_set(T1)) continue;
        InversionSet T2{T.n, std::move(second), false};
        if (!is_inversion_set(T2)) continue;
        out.push_back(InvDecomposition{permutation_from_inversion_set(T1),
                                       permutation_from_inversion_set(T2), std::nullopt});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Slow cross-validation variant: scan S_n x S_n directly.
inline std::vector<InvDecomposition> brute_decompositions_pairwise(const Permutation& p) {
    const int n = p.size();
    if (n > 6) throw std::length_error("brute_decompositions_pairwise: size budget exceeded");
    const auto T = inversion_set(p);
    std::vector<InvDecomposition> out;
    std::vector<int> wa(n);
    std::iota(wa.begin(), wa.end(), 1);
    do {
        Permutation a(wa);
        if (a.is_identity()) continue;
        auto Ta = inversion_set(a);
        std::vector<int> wb(n);
        std::iota(wb.begin(), wb.end(), 1);
        do {
            Permutation b(wb);
            if (b.is_identity() || !(a < b)) continue;
            auto Tb = inversion_set(b);
            if (!edges_disjoint(Ta.edges, Tb.edges)) continue;
            if (edge_union(Ta.edges, Tb.edges) != T.edges) continue;
            if (Ta.contains(T.edges.front()))
                out.push_back(InvDecomposition{a, b, std::nullopt});
            else
                out.push_back(InvDecomposition{b, a, std::nullopt});
        } while (std::next_permutation(wb.begin(), wb.end()));
    } while (std::next_permutation(wa.begin(), wa.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// All nonempty modules, by definitional check over every vertex subset.
inline std::vector<std::vector<int>> brute_modules(const Graph& g) {
    const int n = g.size();
    if (n > 10) throw std::length_error("brute_modules: size budget exceeded");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) members.push_back(v);
        if (is_module(g, members)) out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline bool sets_overlap(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return !inter.empty() && inter.size() != a.size() && inter.size() != b.size();
}

}  // namespace detail

// Modules overlapped by no other module.
inline std::vector<std::vector<int>> brute_strong_modules(const Graph& g) {
    auto mods = brute_modules(g);
    std::vector<std::vector<int>> out;
    for (const auto& M : mods) {
        bool strong = true;
        for (const auto& N : mods)
            if (detail::sets_overlap(M, N)) {
                strong = false;
                break;
            }
        if (strong) out.push_back(M);
    }
    return out;
}

// Same contract as all_blocks, separate code path: sort the image and
// check it is a run of consecutive values.
inline std::vector<Interval> brute_blocks(const Permutation& p) {
    const int n = p.size();
    std::vector<Interval> out;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi) {
            std::vector<int> image;
            for (int i = lo; i <= hi; ++i) image.push_back(p(i));
            std::sort(image.begin(), image.end());
            bool consecutive = true;
            for (std::size_t k = 1; k < image.size(); ++k)
                if (image[k] != image[k - 1] + 1) {
                    consecutive = false;
                    break;
                }
            if (consecutive) out.push_back({lo, hi});
        }
    return out;
}

// ---------------------------------------------------------------------
// Per-permutation checks driven by sweep_verify.
// ---------------------------------------------------------------------

namespace checks {

template <typename Fn>
inline void for_all_permutations(int n, Fn&& fn) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

inline bool round_trip_inversion(const Permutation& p) {
    return permutation_from_inversion_set(inversion_set(p)) == p;
}

inline bool round_trip_tree(const Permutation& p) {
    return tree_to_permutation(substitution_tree(p)) == p;
}

inline bool complement(const Permutation& p) {
    auto w0 = Permutation::reverse_identity(p.size());
    return complement_edges(inversion_set(p)) == inversion_set(compose(w0, p)).edges;
}

// T[ab] = T[b] symdiff b^{-1} T[a] b, for every second factor b.
inline bool product_identity(const Permutation& p) {
    bool ok = true;
    for_all_permutations(p.size(), [&](const Permutation& q) {
        if (!ok) return;
        auto lhs = inversion_set(compose(p, q)).edges;
        auto rhs = edge_symmetric_difference(inversion_set(q).edges,
                                             apply_map(inversion_set(p), inverse(q)));
        if (lhs != rhs) ok = false;
    });
    return ok;
}

inline bool clique_run(const Permutation& p) {
    const int n = p.size();
    auto g = inversion_graph(p);
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) vs.push_back(v);
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adjacent(vs[a], vs[b])) {
                    clique = false;
                    break;
                }
        if (clique) best = std::max(best, static_cast<int>(vs.size()));
    }
    return best == longest_decreasing_run(p);
}

inline bool blocks_brute(const Permutation& p) { return all_blocks(p) == brute_blocks(p); }

inline bool strong_blocks_tree(const Permutation& p) {
    auto blocks = brute_blocks(p);
    std::vector<Interval> strong;
    for (const auto& B : blocks) {
        bool ok = true;
        for (const auto& C : blocks)
            if (B.overlaps(C)) {
                ok = false;
                break;
            }
        if (ok) strong.push_back(B);
    }
    return strong == strong_modules(p);
}

inline bool strong_modules_appendix(const Permutation& p) {
    auto brute = brute_strong_modules(inversion_graph(p));
    std::vector<std::vector<int>> tree;
    for (const auto& I : strong_modules(p)) {
        std::vector<int> members(I.length());
        std::iota(members.begin(), members.end(), I.lo);
        tree.push_back(std::move(members));
    }
    std::sort(tree.begin(), tree.end());
    return brute == tree;
}

inline bool module_block_interval(const Permutation& p) {
    auto g = inversion_graph(p);
    for (int lo = 1; lo <= p.size(); ++lo)
        for (int hi = lo; hi <= p.size(); ++hi) {
            std::vector<int> members(hi - lo + 1);
            std::iota(members.begin(), members.end(), lo);
            if (is_block(p, {lo, hi}) != is_module(g, members)) return false;
        }
    return true;
}

// Non-strong modules are exactly the unions of two or more (but not all)
// children of a parallel or serial strong module.
inline bool nonstrong_union(const Permutation& p) {
    auto g = inversion_graph(p);
    auto mods = brute_modules(g);
    auto strong = brute_strong_modules(g);

    struct NodeView {
        BlockKind kind;
        std::vector<Interval> children;
    };
    std::vector<NodeView> nodes;
    auto walk = [&](auto&& self, const SubstitutionTree& t) -> void {
        if (!t.is_leaf()) {
            NodeView nv{t.kind, {}};
            for (const auto& c : t.children) nv.children.push_back(c.interval);
            nodes.push_back(std::move(nv));
            for (const auto& c : t.children) self(self, c);
        }
    };
    walk(walk, substitution_tree(p));

    auto is_union_of_children = [&](const std::vector<int>& M) {
        for (const auto& nv : nodes) {
            if (nv.kind == BlockKind::Prime) continue;
            std::vector<int> covered;
            for (const auto& C : nv.children) {
                bool inside = true;
                for (int v = C.lo; v <= C.hi; ++v)
                    if (!std::binary_search(M.begin(), M.end(), v)) {
                        inside = false;
                        break;
                    }
                if (inside)
                    for (int v = C.lo; v <= C.hi; ++v) covered.push_back(v);
            }
            std::sort(covered.begin(), covered.end());
            if (covered == M) return true;
        }
        return false;
    };

    for (const auto& M : mods) {
        if (std::binary_search(strong.begin(), strong.end(), M)) continue;
        if (!is_union_of_children(M)) return false;
    }
    // converse: every union of children of a parallel/serial node is a module
    for (const auto& nv : nodes) {
        if (nv.kind == BlockKind::Prime) continue;
        const auto l = nv.children.size();
        for (std::uint32_t mask = 1; mask < (1u << l); ++mask) {
            std::vector<int> members;
            for (std::size_t k = 0; k < l; ++k)
                if (mask >> k & 1)
                    for (int v = nv.children[k].lo; v <= nv.children[k].hi; ++v)
                        members.push_back(v);
            std::sort(members.begin(), members.end());
            if (!std::binary_search(mods.begin(), mods.end(), members)) return false;
        }
    }
    return true;
}

inline bool component_fixed(const Permutation& p) {
    auto g = inversion_graph(p);
    for (const auto& comp : connected_components(g)) {
        std::vector<int> image;
        for (int v : comp) image.push_back(p(v));
        std::sort(image.begin(), image.end());
        if (image != comp) return false;
    }
    return true;
}

// Images of the lower/upper exterior and of the interior gaps of a module.
inline bool naka(const Permutation& p) {
    const int n = p.size();
    auto g = inversion_graph(p);
    for (const auto& M : brute_modules(g)) {
        int mn = M.front(), mx = M.back();
        std::vector<int> outside, gaps;
        for (int v = 1; v <= n; ++v) {
            if (std::binary_search(M.begin(), M.end(), v)) continue;
            if (v < mn || v > mx) outside.push_back(v);
            else gaps.push_back(v);
        }
        std::vector<int> img_m;
        for (int v : M) img_m.push_back(p(v));
        std::sort(img_m.begin(), img_m.end());
        int imn = img_m.front(), imx = img_m.back();

        std::vector<int> img_outside, img_gaps;
        for (int v : outside) img_outside.push_back(p(v));
        for (int v : gaps) img_gaps.push_back(p(v));
        std::sort(img_outside.begin(), img_outside.end());
        std::sort(img_gaps.begin(), img_gaps.end());

        std::vector<int> expect_outside, expect_gaps;
        for (int v = 1; v <= n; ++v) {
            if (std::binary_search(img_m.begin(), img_m.end(), v)) continue;
            if (v < imn || v > imx) expect_outside.push_back(v);
            else expect_gaps.push_back(v);
        }
        if (img_outside != expect_outside || img_gaps != expect_gaps) return false;
    }
    return true;
}

inline bool edge_class_equivalence(const Permutation& p) {
    auto structural = edge_classes_structural(p);
    auto closure = edge_classes_closure(inversion_graph(p));
    if (!same_edge_partition(structural, closure)) return false;
    // partition sanity: the classes cover T_p exactly once
    std::vector<Edge> covered;
    for (const auto& cls : structural.classes) {
        if (cls.edges.empty()) return false;
        covered.insert(covered.end(), cls.edges.begin(), cls.edges.end());
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return false;
    return covered == inversion_set(p).edges;
}

inline bool count_brute(const Permutation& p) {
    return count_decompositions(p) == brute_decompositions(p).size();
}

inline bool enum_brute(const Permutation& p) {
    auto fast = enumerate_decompositions(p);
    std::sort(fast.begin(), fast.end());
    return fast == brute_decompositions(p);
}

inline bool enum_soundness(const Permutation& p) {
    auto T = inversion_set(p);
    auto classes = edge_classes_structural(p);
    auto vid = vertex_vector(Permutation::identity(p.size()));
    auto vp = vertex_vector(p);
    bool ok = true;
    for_each_decomposition(p, [&](const InvDecomposition& d) {
        if (d.tau1.is_identity() || d.tau2.is_identity()) return ok = false;
        auto T1 = inversion_set(d.tau1);
        auto T2 = inversion_set(d.tau2);
        if (!edges_disjoint(T1.edges, T2.edges)) return ok = false;
        if (edge_union(T1.edges, T2.edges) != T.edges) return ok = false;
        // midpoint of (id, p) equals midpoint of (tau1, tau2)
        auto v1 = vertex_vector(d.tau1);
        auto v2 = vertex_vector(d.tau2);
        for (std::size_t k = 0; k < vid.entries.size(); ++k)
            if (vid.entries[k] + vp.entries[k] != v1.entries[k] + v2.entries[k])
                return ok = false;
        // classes are never split between the parts
        for (const auto& cls : classes.classes) {
            bool in1 = T1.contains(cls.edges.front());
            for (const auto& e : cls.edges)
                if ((in1 ? T1 : T2).contains(e) == false) return ok = false;
        }
        return true;
    });
    return ok;
}

// The inflation construction reaches exactly the enumerated pairs.
inline bool inflation_equivalence(const Permutation& p) {
    auto tree = substitution_tree(p);
    struct Node {
        Interval module;
        BlockKind kind;
        int arity;
    };
    std::vector<Node> nodes;
    auto walk = [&](auto&& self, const SubstitutionTree& t) -> void {
        if (!t.is_leaf()) {
            if (t.kind != BlockKind::Parallel)
                nodes.push_back({t.interval, t.kind, static_cast<int>(t.children.size())});
            for (const auto& c : t.children) self(self, c);
        }
    };
    walk(walk, tree);

    std::set<std::pair<std::vector<int>, std::vector<int>>> built;
    std::vector<int> side(nodes.size(), 1);
    std::vector<std::vector<int>> sigma;
    for (const auto& node : nodes) {
        std::vector<int> w(node.arity);
        std::iota(w.begin(), w.end(), 1);
        sigma.push_back(std::move(w));
    }
    if (!nodes.empty()) {
        for (;;) {
            DecompositionChoice choice;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                if (nodes[k].kind == BlockKind::Prime)
                    choice.prime_side.emplace(nodes[k].module, side[k]);
                else
                    choice.serial_perm.emplace(nodes[k].module, Permutation(sigma[k]));
            }
            try {
                auto d = decomposition_by_inflation(p, choice);
                built.insert({d.tau1.word(), d.tau2.word()});
            } catch (const std::invalid_argument&) {
                // trivial corner: one part collapsed to the identity
            }
            std::size_t k = nodes.size();
            while (k > 0) {
                const std::size_t idx = k - 1;
                if (nodes[idx].kind == BlockKind::Prime) {
                    if (side[idx] == 1) {
                        side[idx] = 2;
                        break;
                    }
                    side[idx] = 1;
                } else {
                    if (std::next_permutation(sigma[idx].begin(), sigma[idx].end())) break;
                }
                --k;
            }
            if (k == 0) break;
        }
    }

    std::set<std::pair<std::vector<int>, std::vector<int>>> enumerated;
    for (const auto& d : enumerate_decompositions(p))
        enumerated.insert({d.tau1.word(), d.tau2.word()});
    return built == enumerated;
}

inline bool multiplicative_witness_check(const Permutation& p) {
    auto w = multiplicative_witness(p);
    if (!is_decomposable(p)) return !w;
    if (!w) return false;
    try {
        return is_multiplicative(p, *w);
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// A connected inversion graph with a non-multiplicative decomposition
// forces a decreasing subsequence of size 4.
inline bool nonmult_run(const Permutation& p) {
    if (connected_components(inversion_graph(p)).size() != 1) return true;
    bool has_nonmult = false;
    for_each_decomposition(p, [&](const InvDecomposition& d) {
        if (!is_multiplicative(p, d)) {
            has_nonmult = true;
            return false;
        }
        return true;
    });
    return !has_nonmult || longest_decreasing_run(p) >= 4;
}

inline bool length_bound(const Permutation& p) {
    if (inversion_set(p).size() < min_inversions_guarantee(p.size())) return true;
    return is_decomposable(p);
}

// Three-part partitions from recursive two-splits: all pairwise merges
// must land on inversion sets again.
inline bool merge_parts_check(const Permutation& p) {
    auto check_triple = [&](const Permutation& a, const Permutation& b, const Permutation& c) {
        std::vector<Permutation> parts{a, b, c};
        if (!validate_partition(p, parts)) return false;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                auto merged = edge_union(inversion_set(parts[i]).edges,
                                         inversion_set(parts[j]).edges);
                if (!is_inversion_set(InversionSet{p.size(), merged, false})) return false;
                if (inversion_set(merge_parts(p, parts, i, j)).edges != merged) return false;
            }
        return true;
    };
    bool ok = true;
    for_each_decomposition(p, [&](const InvDecomposition& d) {
        for (int split_first : {0, 1}) {
            const auto& target = split_first ? d.tau1 : d.tau2;
            const auto& other = split_first ? d.tau2 : d.tau1;
            bool inner_ok = true;
            for_each_decomposition(target, [&](const InvDecomposition& e) {
                if (!check_triple(e.tau1, e.tau2, other)) {
                    inner_ok = false;
                    return false;
                }
                return true;
            });
            if (!inner_ok) {
                ok = false;
                return false;
            }
        }
        return true;
    });
    return ok;
}

}  // namespace checks

// ---------------------------------------------------------------------
// Exhaustive sweep over S_n.
// ---------------------------------------------------------------------

struct CheckResult {
    std::int64_t passes = 0;
    std::int64_t failures = 0;
    std::vector<Permutation> witnesses;
};

struct SweepReport {
    int n = 0;
    std::int64_t permutations_checked = 0;
    std::vector<std::pair<std::string, CheckResult>> checks;

    bool has_failures() const {
        for (const auto& [name, r] : checks)
            if (r.failures > 0) return true;
        return false;
    }
};

struct SweepOptions {
    std::vector<std::string> checks;  // empty: every check applicable at n
    int jobs = 1;
    int witness_cap = 10;
    bool all_witnesses = false;
};

struct CheckDef {
    const char* name;
    int default_min_n;  // default selection range
    int default_max_n;
    int hard_max_n;     // explicit selection limit
    bool (*fn)(const Permutation&);
};

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = {
        {"round-trip-inversion", 1, 7, 7, checks::round_trip_inversion},
        {"round-trip-tree", 1, 7, 7, checks::round_trip_tree},
        {"complement", 1, 7, 7, checks::complement},
        {"product-identity", 1, 5, 6, checks::product_identity},
        {"clique-run", 1, 6, 7, checks::clique_run},
        {"blocks-brute", 1, 7, 7, checks::blocks_brute},
        {"strong-blocks-tree", 1, 6, 7, checks::strong_blocks_tree},
        {"strong-modules-appendix", 1, 6, 6, checks::strong_modules_appendix},
        {"module-block-interval", 1, 6, 7, checks::module_block_interval},
        {"nonstrong-union", 1, 6, 6, checks::nonstrong_union},
        {"component-fixed", 1, 7, 7, checks::component_fixed},
        {"naka", 1, 6, 6, checks::naka},
        {"edge-class-equivalence", 1, 7, 7, checks::edge_class_equivalence},
        {"count-brute", 1, 6, 6, checks::count_brute},
        {"enum-brute", 1, 6, 6, checks::enum_brute},
        {"enum-soundness", 1, 6, 7, checks::enum_soundness},
        {"inflation-equivalence", 1, 6, 7, checks::inflation_equivalence},
        {"multiplicative-witness", 1, 7, 7, checks::multiplicative_witness_check},
        {"nonmult-run", 1, 6, 6, checks::nonmult_run},
        {"length-bound", 5, 7, 7, checks::length_bound},
        {"merge-parts", 1, 5, 5, checks::merge_parts_check},
    };
    return defs;
}

inline int sweep_cap() {
    const char* s = std::getenv("INVDEC_MAX_N");
    if (!s || !*s) return 7;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1)
        throw std::invalid_argument("INVDEC_MAX_N must be a positive integer");
    return static_cast<int>(v);
}

namespace detail {

inline std::int64_t factorial64(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Permutation nth_permutation(int n, std::int64_t rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<std::int64_t> fact(n, 1);
    for (int i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<int> w;
    w.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        auto idx = rank / fact[i];
        rank %= fact[i];
        w.push_back(avail[static_cast<std::size_t>(idx)]);
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(w));
}

}  // namespace detail

// Runs the selected checks on every permutation of [n]. Reports are
// deterministic: witnesses come out in lexicographic order regardless of
// the worker count, capped per check unless all_witnesses is set.
inline SweepReport sweep_verify(int n, const SweepOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("sweep_verify: n must be positive");
    const int cap = sweep_cap();
    if (n > cap)
        throw std::length_error("sweep_verify: n exceeds the sweep cap (INVDEC_MAX_N, default 7)");

    const auto& registry = check_registry();
    std::vector<const CheckDef*> selected;
    if (opts.checks.empty()) {
        for (const auto& def : registry)
            if (def.default_min_n <= n && n <= def.default_max_n) selected.push_back(&def);
    } else {
        for (const auto& name : opts.checks) {
            const CheckDef* found = nullptr;
            for (const auto& def : registry)
                if (name == def.name) {
                    found = &def;
                    break;
                }
            if (!found) throw std::invalid_argument("sweep_verify: unknown check '" + name + "'");
            if (n > found->hard_max_n)
                throw std::length_error("sweep_verify: check '" + name +
                                        "' exceeds its size budget at n=" + std::to_string(n));
            selected.push_back(found);
        }
    }

    const std::int64_t total = detail::factorial64(n);
    const int jobs = std::max(1, std::min({opts.jobs, 64, static_cast<int>(total)}));
    const std::int64_t witness_limit =
        opts.all_witnesses ? total : static_cast<std::int64_t>(std::max(0, opts.witness_cap));

    std::vector<std::vector<CheckResult>> shard_results(
        static_cast<std::size_t>(jobs), std::vector<CheckResult>(selected.size()));

    auto worker = [&](int shard) {
        const std::int64_t lo = total * shard / jobs;
        const std::int64_t hi = total * (shard + 1) / jobs;
        if (lo >= hi) return;
        auto& results = shard_results[static_cast<std::size_t>(shard)];
        std::vector<int> w = detail::nth_permutation(n, lo).word();
        for (std::int64_t r = lo; r < hi; ++r) {
            Permutation p(w);
            for (std::size_t c = 0; c < selected.size(); ++c) {
                bool ok;
                try {
                    ok = selected[c]->fn(p);
                } catch (const std::exception&) {
                    ok = false;
                }
                if (ok) {
                    ++results[c].passes;
                } else {
                    ++results[c].failures;
                    if (static_cast<std::int64_t>(results[c].witnesses.size()) < witness_limit)
                        results[c].witnesses.push_back(p);
                }
            }
            std::next_permutation(w.begin(), w.end());
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int shard = 0; shard < jobs; ++shard) threads.emplace_back(worker, shard);
        for (auto& t : threads) t.join();
    }

    SweepReport report{n, total, {}};
    for (std::size_t c = 0; c < selected.size(); ++c) {
        CheckResult merged;
        for (int shard = 0; shard < jobs; ++shard) {
            const auto& r = shard_results[static_cast<std::size_t>(shard)][c];
            merged.passes += r.passes;
            merged.failures += r.failures;
            for (const auto& wit : r.witnesses)
                if (static_cast<std::int64_t>(merged.witnesses.size()) < witness_limit)
                    merged.witnesses.push_back(wit);
        }
        report.checks.emplace_back(selected[c]->name, std::move(merged));
    }
    return report;
}

}  // namespace invdec::oracle
