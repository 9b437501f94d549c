#include <catch2/catch_amalgamated.hpp>

#include "invdec/blocks.hpp"

using namespace invdec;

namespace {

Permutation P(const std::string& s) { return parse_permutation(s); }

template <typename Fn>
void for_all(int n, Fn&& fn) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

void collect_nodes(const SubstitutionTree& t, std::vector<const SubstitutionTree*>& out) {
    out.push_back(&t);
    for (const auto& c : t.children) collect_nodes(c, out);
}

}  // namespace

TEST_CASE("block test by image interval", "[blocks]") {
    CHECK_FALSE(is_block(P("2413"), {2, 3}));
    CHECK(is_block(P("3412"), {1, 2}));
    for_all(4, [](const Permutation& p) { REQUIRE(is_block(p, {1, 4})); });
    CHECK_THROWS_AS(is_block(P("321"), {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(is_block(P("321"), {1, 4}), std::invalid_argument);
}

TEST_CASE("all blocks of known words", "[blocks]") {
    CHECK(all_blocks(P("2413")) ==
          std::vector<Interval>{{1, 1}, {1, 4}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(all_blocks(P("3412")) ==
          std::vector<Interval>{{1, 1}, {1, 2}, {1, 4}, {2, 2}, {3, 3}, {3, 4}, {4, 4}});
    CHECK(all_blocks(P("123")).size() == 6);
}

TEST_CASE("block classification", "[blocks]") {
    CHECK(classify_block(P("3412"), {1, 4}) == BlockKind::Serial);
    CHECK(classify_block(P("2143"), {1, 4}) == BlockKind::Parallel);
    CHECK(classify_block(P("2413"), {1, 4}) == BlockKind::Prime);
    CHECK(classify_block(P("123"), {1, 2}) == BlockKind::Parallel);
    CHECK_THROWS_AS(classify_block(P("2413"), {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(classify_block(P("2413"), {2, 2}), std::invalid_argument);
}

TEST_CASE("simplicity", "[blocks]") {
    CHECK(is_simple(P("2413")));
    CHECK(is_simple(P("3142")));
    CHECK_FALSE(is_simple(P("321")));
    CHECK_FALSE(is_simple(P("3412")));
    // by the letter of the definition the sizes 1 and 2 are simple
    CHECK(is_simple(P("1")));
    CHECK(is_simple(P("12")));
    CHECK(is_simple(P("21")));
}

TEST_CASE("substitution tree of 2143", "[blocks]") {
    auto t = substitution_tree(P("2143"));
    REQUIRE(t.kind == BlockKind::Parallel);
    CHECK(t.interval == Interval{1, 4});
    CHECK(t.skeleton == P("12"));
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].interval == Interval{1, 2});
    CHECK(t.children[0].kind == BlockKind::Serial);
    CHECK(t.children[0].skeleton == P("21"));
    CHECK(t.children[1].interval == Interval{3, 4});
    CHECK(t.children[1].kind == BlockKind::Serial);
    REQUIRE(t.children[0].children.size() == 2);
    CHECK(t.children[0].children[0].is_leaf());
}

TEST_CASE("substitution tree of extreme words", "[blocks]") {
    auto serial = substitution_tree(P("4321"));
    CHECK(serial.kind == BlockKind::Serial);
    CHECK(serial.skeleton == P("4321"));
    CHECK(serial.children.size() == 4);
    for (const auto& c : serial.children) CHECK(c.is_leaf());

    auto prime = substitution_tree(P("2413"));
    CHECK(prime.kind == BlockKind::Prime);
    CHECK(prime.skeleton == P("2413"));
    CHECK(prime.children.size() == 4);

    auto leaf = substitution_tree(P("1"));
    CHECK(leaf.is_leaf());
    CHECK(leaf.kind == BlockKind::Parallel);
}

TEST_CASE("inflation", "[blocks]") {
    CHECK(inflate(P("21"), {P("12"), P("12")}) == P("3412"));
    CHECK(inflate(P("132"), {P("21"), P("1"), P("21")}) == P("21543"));
    CHECK(inflate(P("1"), {P("2413")}) == P("2413"));
    CHECK_THROWS_AS(inflate(P("21"), {P("12")}), std::invalid_argument);
}

TEST_CASE("tree to permutation", "[blocks]") {
    CHECK(tree_to_permutation(substitution_tree(P("2143"))) == P("2143"));

    SubstitutionTree leaf1{{1, 1}, BlockKind::Parallel, Permutation::identity(1), {}};
    CHECK(tree_to_permutation(leaf1) == P("1"));

    SubstitutionTree a{{1, 2}, BlockKind::Parallel, P("12"),
                       {SubstitutionTree{{1, 1}, BlockKind::Parallel, P("1"), {}},
                        SubstitutionTree{{2, 2}, BlockKind::Parallel, P("1"), {}}}};
    SubstitutionTree b = a;
    b.interval = {3, 4};
    SubstitutionTree root{{1, 4}, BlockKind::Serial, P("21"), {a, b}};
    CHECK(tree_to_permutation(root) == P("3412"));

    SubstitutionTree bad{{1, 2}, BlockKind::Serial, P("21"),
                         {SubstitutionTree{{1, 1}, BlockKind::Parallel, P("1"), {}}}};
    CHECK_THROWS_AS(tree_to_permutation(bad), std::invalid_argument);
}

TEST_CASE("round trip and structural invariants over S_n", "[blocks]") {
    for (int n = 1; n <= 6; ++n) {
        for_all(n, [&](const Permutation& p) {
            auto t = substitution_tree(p);
            REQUIRE(tree_to_permutation(t) == p);

            std::vector<const SubstitutionTree*> nodes;
            collect_nodes(t, nodes);

            // node intervals are exactly the strong blocks
            std::vector<Interval> ivs;
            for (auto* node : nodes) ivs.push_back(node->interval);
            std::sort(ivs.begin(), ivs.end());
            REQUIRE(ivs == strong_blocks(p));

            for (auto* node : nodes) {
                if (node->is_leaf()) {
                    REQUIRE(node->interval.length() == 1);
                    REQUIRE(node->kind == BlockKind::Parallel);
                    continue;
                }
                // children partition the interval in order
                REQUIRE(node->children.size() >= 2);
                REQUIRE(static_cast<int>(node->children.size()) == node->skeleton.size());
                int at = node->interval.lo;
                for (const auto& c : node->children) {
                    REQUIRE(c.interval.lo == at);
                    at = c.interval.hi + 1;
                }
                REQUIRE(at == node->interval.hi + 1);
                // children are the maximal strong proper sub-blocks
                REQUIRE(detail::children_partition(all_blocks(p), node->interval) ==
                        block_children(p, node->interval));
                // like kinds never nest among internal nodes
                for (const auto& c : node->children)
                    if (!c.is_leaf() &&
                        (node->kind == BlockKind::Parallel || node->kind == BlockKind::Serial))
                        REQUIRE(c.kind != node->kind);
                // prime skeletons are simple of size >= 4
                if (node->kind == BlockKind::Prime) {
                    REQUIRE(node->skeleton.size() >= 4);
                    REQUIRE(is_simple(node->skeleton));
                    REQUIRE_FALSE(node->skeleton.is_identity());
                }
                REQUIRE(classify_block(p, node->interval) == node->kind);
            }
        });
    }
}

TEST_CASE("classification is total and exclusive on every block", "[blocks]") {
    for (int n = 2; n <= 5; ++n)
        for_all(n, [&](const Permutation& p) {
            for (const auto& B : all_blocks(p)) {
                if (B.length() < 2) continue;
                auto kind = classify_block(p, B);
                REQUIRE((kind == BlockKind::Parallel || kind == BlockKind::Serial ||
                         kind == BlockKind::Prime));
            }
        });
}
