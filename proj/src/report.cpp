#include "acr/report.hpp"

#include "acr/graph_io.hpp"

namespace acr {

Json to_json(const Dyadic& d) {
    return {{"exact", d.to_pow2_string()}, {"fraction", d.to_string()}, {"decimal", d.to_decimal()}};
}

Json graph_json(const Graph& g) {
    return {{"g6", to_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
}

Json to_json(const ObstructionReport& r) {
    Json members = Json::array();
    for (const auto& m : r.members) {
        members.push_back({{"canon", m.canon}, {"order", m.graph.order()}, {"avg", to_json(m.avg)}, {"class", m.class_id}});
    }
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        classes.push_back({{"id", c.id},
                           {"representative", c.representative},
                           {"order", c.order},
                           {"avg", to_json(c.avg)},
                           {"members", c.members},
                           {"orbit_truncated", c.orbit_truncated}});
    }
    Json out = {{"alpha", to_json(r.alpha)},
                {"mode", to_string(r.mode)},
                {"n_max", r.n_max},
                {"complete_up_to_n_max", r.complete_up_to_n_max},
                {"size_bound", r.size_bound.str()},
                {"post_check_ok", r.post_check_ok},
                {"violations", r.violations},
                {"classes", classes},
                {"members", members}};
    if (!r.diff.empty()) {
        Json diff = Json::array();
        for (const auto& d : r.diff) {
            diff.push_back({{"canon", d.canon}, {"avg", to_json(d.avg)}, {"status", d.status}, {"reason", d.reason}});
        }
        out["diff"] = diff;
    }
    return out;
}

Json to_json(const std::vector<CensusEntry>& census) {
    Json out = Json::array();
    for (const auto& e : census) {
        Json row = to_json(e.value);
        row["witness"] = e.witness;
        Json fams = Json::array();
        for (const auto& m : three_halves_membership(e.value)) fams.push_back({{"family", m.family}, {"k", m.k}});
        row["families"] = fams;
        out.push_back(row);
    }
    return out;
}

Json to_json(const ForestFamily& f, const std::vector<Tri>& minimal) {
    Json members = Json::array();
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        const FamilyEntry& e = f.members[i];
        Json steps = Json::array();
        for (const FamilyStep& s : e.provenance) {
            Json step = {{"kind", to_string(s.kind)}, {"size", s.size}};
            if (s.kind == StepKind::AttachStar) step["at"] = s.at;
            step["precondition"] = to_string(s.precondition);
            steps.push_back(step);
        }
        Json m = graph_json(e.forest);
        m["avg"] = e.avg ? to_json(*e.avg) : Json(nullptr);
        if (i < minimal.size()) m["minimal"] = to_string(minimal[i]);
        m["provenance"] = steps;
        members.push_back(m);
    }
    Json out = {{"eps", to_json(f.eps)}, {"n", f.n}, {"count", f.members.size()}, {"partial", f.partial}};
    if (f.partial) out["partial_reason"] = f.partial_reason;
    out["members"] = members;
    return out;
}

Json to_json(const ParamReport& p) {
    auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
    Json comps = Json::array();
    for (const auto& c : p.comparisons) {
        comps.push_back({{"chain", c.chain}, {"relation", c.relation}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
    }
    Json cliques = Json::array();
    for (VertexSet s : p.cd_upper.cliques) cliques.push_back(s.to_vector());
    Json witness = Json::array();
    for (VertexSet s : p.cd_witness) witness.push_back(s.to_vector());
    return {{"avg", to_json(p.avg)},
            {"max_cut_rank", p.max_rho},
            {"nd", p.nd},
            {"mr_f2", p.mr2 ? Json(p.mr2->rank) : Json(nullptr)},
            {"mr_f2_diagonal", p.mr2 ? Json(std::to_string(p.mr2->diagonal)) : Json(nullptr)},
            {"mr_f3", opt(p.mr3)},
            {"cd", opt(p.cd)},
            {"cd_witness", witness},
            {"cd_upper", cliques},
            {"comparisons", comps},
            {"gaps", p.gaps},
            {"ok", p.all_ok()}};
}

Json to_json(const SuiteResult& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"check", f.check},
                            {"certificate", f.certificate},
                            {"quantity", f.quantity},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    }
    return {{"suite", r.suite},
            {"cases", r.cases},
            {"failures", failures},
            {"indeterminate", r.indeterminate},
            {"ok", r.ok()},
            {"wall_ms", r.wall_ms},
            {"details", r.details}};
}

Json to_json(const VmResult& r) {
    return {{"answer", to_string(r.answer)}, {"witness", r.witness}};
}

}  // namespace acr
