#pragma once

#include "invdec/oracle.hpp"

#include <json.hpp>

namespace invdec {

using ojson = nlohmann::ordered_json;

inline ojson perm_json(const Permutation& p) { return ojson(p.word()); }

inline ojson interval_json(const Interval& I) { return ojson::array({I.lo, I.hi}); }

inline ojson edge_json(const Edge& e) { return ojson::array({e.first, e.second}); }

inline ojson edges_json(const std::vector<Edge>& edges) {
    auto arr = ojson::array();
    for (const auto& e : edges) arr.push_back(edge_json(e));
    return arr;
}

inline ojson tree_json(const SubstitutionTree& t) {
    ojson node;
    node["interval"] = interval_json(t.interval);
    node["kind"] = to_string(t.kind);
    node["skeleton"] = perm_json(t.skeleton);
    auto children = ojson::array();
    for (const auto& c : t.children) children.push_back(tree_json(c));
    node["children"] = std::move(children);
    return node;
}

inline ojson edge_classes_json(const EdgeClassPartition& part) {
    ojson out;
    auto classes = ojson::array();
    for (const auto& cls : part.classes) {
        ojson c;
        c["edges"] = edges_json(cls.edges);
        if (cls.origin) {
            ojson origin;
            origin["kind"] = cls.origin->kind == EdgeClassOrigin::Kind::SerialPair
                                 ? "serial-pair"
                                 : "prime-external";
            origin["module"] = interval_json(cls.origin->module);
            if (cls.origin->kind == EdgeClassOrigin::Kind::SerialPair)
                origin["pair"] = ojson::array({cls.origin->child_i, cls.origin->child_j});
            c["origin"] = std::move(origin);
        }
        classes.push_back(std::move(c));
    }
    out["classes"] = std::move(classes);
    return out;
}

inline ojson decompositions_json(const Permutation& p, std::uint64_t count,
                                 const std::vector<InvDecomposition>& items) {
    ojson out;
    out["pi"] = perm_json(p);
    out["count"] = count;
    auto arr = ojson::array();
    for (const auto& d : items) {
        ojson item;
        item["tau1"] = perm_json(d.tau1);
        item["tau2"] = perm_json(d.tau2);
        item["multiplicative"] = is_multiplicative(p, d);
        arr.push_back(std::move(item));
    }
    out["decompositions"] = std::move(arr);
    return out;
}

inline ojson sweep_report_json(const oracle::SweepReport& report) {
    ojson out;
    out["n"] = report.n;
    out["permutations_checked"] = report.permutations_checked;
    ojson checks;
    for (const auto& [name, r] : report.checks) {
        ojson c;
        c["passes"] = r.passes;
        c["failures"] = r.failures;
        auto wits = ojson::array();
        for (const auto& w : r.witnesses) wits.push_back(perm_json(w));
        c["witnesses"] = std::move(wits);
        checks[name] = std::move(c);
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace invdec
