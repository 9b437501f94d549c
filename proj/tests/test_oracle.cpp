#include <catch2/catch_amalgamated.hpp>

#include "invdec/json_io.hpp"
#include "invdec/oracle.hpp"

#include <cstdlib>

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

}  // namespace

TEST_CASE("subset-exhaustion decompositions", "[oracle]") {
    auto triangle = oracle::brute_decompositions(P("321"));
    REQUIRE(triangle.size() == 2);
    CHECK(triangle[0].tau1 == P("213"));
    CHECK(triangle[0].tau2 == P("231"));
    CHECK(triangle[1].tau1 == P("312"));
    CHECK(triangle[1].tau2 == P("132"));

    CHECK(oracle::brute_decompositions(P("2413")).empty());
    CHECK(oracle::brute_decompositions(Permutation::identity(4)).empty());
    CHECK(oracle::brute_decompositions(P("4321")).size() == 11);

    // w0 on 8 letters has 28 inversions, over the subset budget
    CHECK_THROWS_AS(oracle::brute_decompositions(Permutation::reverse_identity(8)),
                    std::length_error);
}

TEST_CASE("pairwise scan agrees with subset exhaustion", "[oracle]") {
    for (int n = 1; n <= 5; ++n)
        for_all(n, [&](const Permutation& p) {
            REQUIRE(oracle::brute_decompositions_pairwise(p) == oracle::brute_decompositions(p));
        });
    CHECK_THROWS_AS(oracle::brute_decompositions_pairwise(Permutation::identity(7)),
                    std::length_error);
}

TEST_CASE("module enumeration", "[oracle]") {
    CHECK(oracle::brute_modules(inversion_graph(P("321"))).size() == 7);
    CHECK(oracle::brute_modules(inversion_graph(Permutation::identity(3))).size() == 7);
    CHECK(oracle::brute_modules(inversion_graph(P("2413"))) ==
          std::vector<std::vector<int>>{{1}, {1, 2, 3, 4}, {2}, {3}, {4}});
    CHECK_THROWS_AS(oracle::brute_modules(Graph(11, {})), std::length_error);
}

TEST_CASE("strong module enumeration", "[oracle]") {
    CHECK(oracle::brute_strong_modules(inversion_graph(P("321"))) ==
          std::vector<std::vector<int>>{{1}, {1, 2, 3}, {2}, {3}});
    CHECK(oracle::brute_strong_modules(inversion_graph(P("2143"))) ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2, 3, 4}, {2}, {3}, {3, 4}, {4}});
    CHECK(oracle::brute_strong_modules(Graph(1, {})) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("independent block scan", "[oracle]") {
    CHECK(oracle::brute_blocks(P("2413")).size() == 5);
    CHECK(oracle::brute_blocks(P("3412")).size() == 7);
    CHECK(oracle::brute_blocks(P("123")).size() == 6);
    for (int n = 1; n <= 5; ++n)
        for_all(n, [&](const Permutation& p) { REQUIRE(oracle::brute_blocks(p) == all_blocks(p)); });
}

TEST_CASE("sweep over S_3 is clean", "[oracle]") {
    auto report = oracle::sweep_verify(3);
    CHECK(report.n == 3);
    CHECK(report.permutations_checked == 6);
    CHECK_FALSE(report.has_failures());
    for (const auto& [name, r] : report.checks) {
        CHECK(r.passes + r.failures == 6);
        CHECK(r.failures == 0);
    }
    // the default selection at n=3 skips the length bound, which only holds from n=5 on
    for (const auto& [name, r] : report.checks) CHECK(name != "length-bound");
}

TEST_CASE("sweep over S_4 and S_5 with default checks is clean", "[oracle]") {
    CHECK_FALSE(oracle::sweep_verify(4).has_failures());
    CHECK_FALSE(oracle::sweep_verify(5).has_failures());
}

// every check at the top of its default range: n=6 covers the
// subset-exponential ones, n=7 the cheap structural ones
TEST_CASE("sweeps at the size budgets are clean", "[oracle]") {
    oracle::SweepOptions opts;
    opts.jobs = 4;
    auto at6 = oracle::sweep_verify(6, opts);
    CHECK(at6.permutations_checked == 720);
    CHECK_FALSE(at6.has_failures());
    auto at7 = oracle::sweep_verify(7, opts);
    CHECK(at7.permutations_checked == 5040);
    CHECK_FALSE(at7.has_failures());
}

TEST_CASE("length-bound check flags the documented small cases", "[oracle]") {
    oracle::SweepOptions opts;
    opts.checks = {"length-bound"};

    auto at4 = oracle::sweep_verify(4, opts);
    REQUIRE(at4.checks.size() == 1);
    CHECK(at4.checks[0].second.failures == 1);
    REQUIRE(at4.checks[0].second.witnesses.size() == 1);
    CHECK(at4.checks[0].second.witnesses[0] == P("3412"));

    auto at3 = oracle::sweep_verify(3, opts);
    CHECK(at3.checks[0].second.failures == 2);  // 231 and 312

    auto at5 = oracle::sweep_verify(5, opts);
    CHECK(at5.checks[0].second.failures == 0);
}

TEST_CASE("sweep reports are deterministic and shardable", "[oracle]") {
    oracle::SweepOptions serial;
    auto a = sweep_report_json(oracle::sweep_verify(4, serial)).dump();
    auto b = sweep_report_json(oracle::sweep_verify(4, serial)).dump();
    CHECK(a == b);

    oracle::SweepOptions threaded;
    threaded.jobs = 3;
    auto c = sweep_report_json(oracle::sweep_verify(4, threaded)).dump();
    CHECK(a == c);
}

TEST_CASE("witness capping", "[oracle]") {
    oracle::SweepOptions opts;
    opts.checks = {"length-bound"};
    opts.witness_cap = 1;
    auto report = oracle::sweep_verify(3, opts);
    CHECK(report.checks[0].second.failures == 2);
    CHECK(report.checks[0].second.witnesses.size() == 1);

    opts.all_witnesses = true;
    auto full = oracle::sweep_verify(3, opts);
    CHECK(full.checks[0].second.witnesses.size() == 2);
}

TEST_CASE("sweep input validation", "[oracle]") {
    CHECK_THROWS_AS(oracle::sweep_verify(0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::sweep_verify(8), std::length_error);  // default cap

    oracle::SweepOptions unknown;
    unknown.checks = {"no-such-check"};
    CHECK_THROWS_AS(oracle::sweep_verify(3, unknown), std::invalid_argument);

    oracle::SweepOptions over;
    over.checks = {"merge-parts"};
    CHECK_THROWS_AS(oracle::sweep_verify(6, over), std::length_error);

    setenv("INVDEC_MAX_N", "3", 1);
    CHECK_THROWS_AS(oracle::sweep_verify(4), std::length_error);
    CHECK_NOTHROW(oracle::sweep_verify(3));
    setenv("INVDEC_MAX_N", "junk", 1);
    CHECK_THROWS_AS(oracle::sweep_verify(2), std::invalid_argument);
    unsetenv("INVDEC_MAX_N");
}
