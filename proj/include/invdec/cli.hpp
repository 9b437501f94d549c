#pragma once

#include "invdec/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace invdec::cli {

namespace detail {

inline void emit(std::ostream& out, const ojson& j) { out << j.dump() << '\n'; }

inline void print_tree_pretty(std::ostream& out, const SubstitutionTree& t, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (t.is_leaf()) {
        out << pad << t.interval << " leaf\n";
        return;
    }
    out << pad << t.interval << ' ' << to_string(t.kind) << "  skeleton: " << t.skeleton.str()
        << '\n';
    for (const auto& c : t.children) print_tree_pretty(out, c, depth + 1);
}

inline void print_classes_pretty(std::ostream& out, const EdgeClassPartition& part) {
    int k = 0;
    for (const auto& cls : part.classes) {
        out << "class " << ++k;
        if (cls.origin) {
            out << " (" << (cls.origin->kind == EdgeClassOrigin::Kind::SerialPair
                                ? "serial-pair "
                                : "prime-external ")
                << cls.origin->module;
            if (cls.origin->kind == EdgeClassOrigin::Kind::SerialPair)
                out << " pair " << cls.origin->child_i << ',' << cls.origin->child_j;
            out << ')';
        }
        out << ':';
        for (const auto& e : cls.edges) out << ' ' << e.first << e.second;
        out << '\n';
    }
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

inline std::vector<Permutation> parse_all(const std::vector<std::string>& words) {
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(parse_permutation(w));
    return out;
}

}  // namespace detail

// Exit codes: 0 success, 1 input error, 2 verification failure.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"inversion-set decomposition toolkit"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

    std::string perm_arg;
    auto* cmd_tree = app.add_subcommand("tree", "substitution decomposition tree");
    cmd_tree->add_option("permutation", perm_arg)->required();
    auto* cmd_blocks = app.add_subcommand("blocks", "all blocks (common intervals)");
    cmd_blocks->add_option("permutation", perm_arg)->required();
    auto* cmd_classes = app.add_subcommand("edge-classes", "edge classes of the inversion graph");
    cmd_classes->add_option("permutation", perm_arg)->required();
    auto* cmd_count = app.add_subcommand("count", "number of inv-decompositions");
    cmd_count->add_option("permutation", perm_arg)->required();

    std::uint64_t limit = 0;
    bool has_limit = false;
    auto* cmd_enum = app.add_subcommand("enum", "enumerate inv-decompositions");
    cmd_enum->add_option("permutation", perm_arg)->required();
    cmd_enum->add_option("--limit", limit, "emit at most this many pairs")
        ->check(CLI::NonNegativeNumber);

    auto* cmd_check = app.add_subcommand("check", "decomposability summary");
    cmd_check->add_option("permutation", perm_arg)->required();
    auto* cmd_mult = app.add_subcommand("mult", "multiplicative decomposition witness");
    cmd_mult->add_option("permutation", perm_arg)->required();

    std::vector<std::string> part_args;
    std::size_t merge_i = 0, merge_j = 0;
    auto* cmd_merge = app.add_subcommand("merge", "merge two parts of an inversion partition");
    cmd_merge->add_option("permutation", perm_arg)->required();
    cmd_merge->add_option("--parts", part_args, "the parts of the partition")
        ->required()
        ->expected(-1);
    cmd_merge->add_option("--i", merge_i, "first part index (0-based)")->required();
    cmd_merge->add_option("--j", merge_j, "second part index (0-based)")->required();

    std::vector<std::string> lhs_args, rhs_args;
    auto* cmd_binomial = app.add_subcommand("binomial", "multiset relation between inversion sets");
    cmd_binomial->add_option("--lhs", lhs_args, "left-hand permutations")->required()->expected(-1);
    cmd_binomial->add_option("--rhs", rhs_args, "right-hand permutations")->required()->expected(-1);

    int verify_n = 0;
    std::string checks_arg;
    int jobs = 1;
    int witness_cap = 10;
    bool all_witnesses = false;
    auto* cmd_verify = app.add_subcommand("verify", "exhaustive sweep over S_n");
    cmd_verify->add_option("--n", verify_n, "sweep size")->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--checks", checks_arg, "comma-separated check names (default: all applicable)");
    cmd_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--witness-cap", witness_cap, "failing witnesses kept per check")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_flag("--all-witnesses", all_witnesses, "keep every failing witness");

    std::vector<const char*> cargs;
    cargs.reserve(argv.size());
    for (const auto& a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    has_limit = cmd_enum->count("--limit") > 0;

    try {
        if (cmd_tree->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto t = substitution_tree(p);
            if (pretty)
                detail::print_tree_pretty(out, t, 0);
            else
                detail::emit(out, tree_json(t));
        } else if (cmd_blocks->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto blocks = all_blocks(p);
            if (pretty) {
                for (const auto& B : blocks) out << B << '\n';
            } else {
                ojson j;
                j["pi"] = perm_json(p);
                auto arr = ojson::array();
                for (const auto& B : blocks) arr.push_back(interval_json(B));
                j["blocks"] = std::move(arr);
                detail::emit(out, j);
            }
        } else if (cmd_classes->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto part = edge_classes_structural(p);
            if (pretty)
                detail::print_classes_pretty(out, part);
            else
                detail::emit(out, edge_classes_json(part));
        } else if (cmd_count->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto c = count_decompositions(p);
            if (pretty) {
                out << "pi: " << p.str() << "\ncount: " << c << '\n';
            } else {
                ojson j;
                j["pi"] = perm_json(p);
                j["count"] = c;
                detail::emit(out, j);
            }
        } else if (cmd_enum->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto c = count_decompositions(p);
            auto items = enumerate_decompositions(
                p, has_limit ? std::optional<std::size_t>(limit) : std::nullopt);
            if (pretty) {
                out << "count: " << c << '\n';
                for (const auto& d : items)
                    out << d.tau1.str() << " | " << d.tau2.str()
                        << (is_multiplicative(p, d) ? "  (multiplicative)" : "") << '\n';
            } else {
                detail::emit(out, decompositions_json(p, c, items));
            }
        } else if (cmd_check->parsed()) {
            auto p = parse_permutation(perm_arg);
            bool dec = is_decomposable(p);
            auto nclasses = edge_classes_structural(p).classes.size();
            if (pretty) {
                out << "decomposable: " << (dec ? "yes" : "no") << '\n'
                    << "edge classes: " << nclasses << '\n'
                    << "neighbor of identity: "
                    << (p.is_identity() ? "undefined" : (is_neighbor_of_identity(p) ? "yes" : "no"))
                    << '\n';
            } else {
                ojson j;
                j["decomposable"] = dec;
                j["edge_classes"] = nclasses;
                if (p.is_identity())
                    j["neighbor_of_identity"] = nullptr;
                else
                    j["neighbor_of_identity"] = is_neighbor_of_identity(p);
                detail::emit(out, j);
            }
        } else if (cmd_mult->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto w = multiplicative_witness(p);
            if (pretty) {
                if (w)
                    out << w->tau1.str() << " | " << w->tau2.str() << '\n';
                else
                    out << "none\n";
            } else {
                ojson j;
                j["pi"] = perm_json(p);
                if (w) {
                    ojson wit;
                    wit["tau1"] = perm_json(w->tau1);
                    wit["tau2"] = perm_json(w->tau2);
                    j["witness"] = std::move(wit);
                } else {
                    j["witness"] = nullptr;
                }
                detail::emit(out, j);
            }
        } else if (cmd_merge->parsed()) {
            auto p = parse_permutation(perm_arg);
            auto parts = detail::parse_all(part_args);
            auto merged = merge_parts(p, parts, merge_i, merge_j);
            if (pretty) {
                out << merged.str() << '\n';
            } else {
                ojson j;
                j["pi"] = perm_json(p);
                j["i"] = merge_i;
                j["j"] = merge_j;
                j["merged"] = perm_json(merged);
                detail::emit(out, j);
            }
        } else if (cmd_binomial->parsed()) {
            auto lhs = detail::parse_all(lhs_args);
            auto rhs = detail::parse_all(rhs_args);
            bool equal = binomial_holds(lhs, rhs);
            auto mismatch = binomial_mismatch(lhs, rhs);
            if (pretty) {
                out << "equal: " << (equal ? "yes" : "no");
                if (mismatch) out << "  (mismatched pair: " << mismatch->first << ' ' << mismatch->second << ')';
                out << '\n';
            } else {
                ojson j;
                auto render = [](const std::vector<Permutation>& ps) {
                    auto arr = ojson::array();
                    for (const auto& q : ps) arr.push_back(perm_json(q));
                    return arr;
                };
                j["lhs"] = render(lhs);
                j["rhs"] = render(rhs);
                j["equal"] = equal;
                if (mismatch)
                    j["mismatch"] = edge_json(*mismatch);
                else
                    j["mismatch"] = nullptr;
                detail::emit(out, j);
            }
        } else if (cmd_verify->parsed()) {
            oracle::SweepOptions opts;
            opts.checks = detail::split_commas(checks_arg);
            opts.jobs = jobs;
            opts.witness_cap = witness_cap;
            opts.all_witnesses = all_witnesses;
            auto report = oracle::sweep_verify(verify_n, opts);
            if (pretty) {
                out << "n: " << report.n
                    << "  permutations: " << report.permutations_checked << '\n';
                for (const auto& [name, r] : report.checks) {
                    out << name << ": " << r.passes << " passed, " << r.failures << " failed";
                    if (!r.witnesses.empty()) {
                        out << "  witnesses:";
                        for (const auto& w : r.witnesses) out << " [" << w.str() << ']';
                    }
                    out << '\n';
                }
            } else {
                detail::emit(out, sweep_report_json(report));
            }
            if (report.has_failures()) return 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace invdec::cli
