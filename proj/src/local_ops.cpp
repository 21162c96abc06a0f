#include "acr/local_ops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "acr/canonical.hpp"
#include "acr/cutrank.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/named.hpp"

namespace acr {

const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Indeterminate: return "indeterminate";
    }
    return "?";
}

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw ParameterError("local_complement: vertex out of range");
    Graph h = g;
    const Word nb = g.row(v);
    for (int a : VertexSet(nb)) h.toggle_row(a, nb & ~low_bits(a + 1));
    return h;
}

Graph pivot(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw ParameterError("pivot: vertex out of range");
    if (!g.adjacent(u, v)) throw DomainError("pivot: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

Orbit orbit(const Graph& g, std::size_t cap) {
    Orbit out;
    std::unordered_set<Graph, GraphHash> seen{g};
    out.members.push_back(g);
    for (std::size_t i = 0; i < out.members.size(); ++i) {
        for (int v = 0; v < g.order(); ++v) {
            Graph next = local_complement(out.members[i], v);
            if (seen.contains(next)) continue;
            if (out.members.size() >= cap) {
                out.truncated = true;
                return out;
            }
            seen.insert(next);
            out.members.push_back(std::move(next));
        }
    }
    return out;
}

namespace {

// Breadth-first closure over isomorphism classes; the frontier holds the
// canonical relabelings.
OrbitClasses class_closure(const Graph& g, std::size_t cap) {
    OrbitClasses out;
    std::set<std::string> seen;
    std::deque<Graph> queue;
    const std::string start = canonical_code(g);
    seen.insert(start);
    queue.push_back(relabel(g, canonical_labeling(g)));
    while (!queue.empty()) {
        const Graph cur = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < cur.order(); ++v) {
            const Graph next = local_complement(cur, v);
            const std::vector<int> lab = canonical_labeling(next);
            Graph canon = relabel(next, lab);
            std::string code = to_graph6(canon);
            if (seen.contains(code)) continue;
            if (seen.size() >= cap) {
                out.truncated = true;
                out.codes.assign(seen.begin(), seen.end());
                return out;
            }
            seen.insert(std::move(code));
            queue.push_back(std::move(canon));
        }
    }
    out.codes.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace

OrbitClasses orbit_classes(const Graph& g, std::size_t cap) { return class_closure(g, cap); }

Tri are_locally_equivalent(const Graph& g, const Graph& h, std::size_t cap) {
    if (g.order() != h.order()) return Tri::False;
    const OrbitClasses oc = orbit_classes(g, cap);
    const std::string target = canonical_code(h);
    if (std::binary_search(oc.codes.begin(), oc.codes.end(), target)) return Tri::True;
    return oc.truncated ? Tri::Indeterminate : Tri::False;
}

std::vector<Graph> elementary_vertex_minors(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw ParameterError("elementary_vertex_minors: vertex out of range");
    std::vector<Graph> candidates{delete_vertex(g, v), delete_vertex(local_complement(g, v), v)};
    if (g.degree(v) > 0) candidates.push_back(delete_vertex(pivot(g, g.neighbors(v).lowest(), v), v));
    std::vector<Graph> out;
    std::set<std::string> codes;
    for (auto& c : candidates) {
        if (codes.insert(canonical_code(c)).second) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Reduction> elementary_reductions(const Graph& g) {
    std::vector<Reduction> out;
    for (int v = 0; v < g.order(); ++v) {
        out.push_back({ReductionKind::Delete, v, -1, delete_vertex(g, v)});
        out.push_back({ReductionKind::LcDelete, v, -1, delete_vertex(local_complement(g, v), v)});
        for (int u : g.neighbors(v)) {
            out.push_back({ReductionKind::PivotDelete, v, u, delete_vertex(pivot(g, u, v), v)});
        }
    }
    return out;
}

namespace {

class VmSearch {
public:
    VmSearch(const Graph& h, const VmOptions& options) : h_(h), options_(options) {
        if (options.target_classes) {
            targets_.insert(options.target_classes->codes.begin(), options.target_classes->codes.end());
            target_truncated_ = options.target_classes->truncated;
        } else {
            const OrbitClasses oc = orbit_classes(h, options.orbit_cap);
            targets_.insert(oc.codes.begin(), oc.codes.end());
            target_truncated_ = oc.truncated;
        }
        target_code_ = canonical_code(h);
        target_avg_ = average_cut_rank(h);
    }

    VmResult run(const Graph& g) {
        VmResult r;
        std::vector<int> labels(static_cast<std::size_t>(g.order()));
        std::iota(labels.begin(), labels.end(), 0);
        if (g.order() < h_.order()) return r;
        const bool found = dfs(g, labels, r.witness);
        if (found) {
            r.answer = Tri::True;
        } else {
            r.answer = (target_truncated_ || gave_up_) ? Tri::Indeterminate : Tri::False;
            r.witness.clear();
        }
        return r;
    }

private:
    static std::string step(const char* op, int a) { return std::string(op) + " " + std::to_string(a); }

    // Labeled search from g towards a graph isomorphic to h; appends LC steps.
    bool finish(const Graph& g, const std::vector<int>& labels, VmWitness& witness) {
        if (canonical_code(g) == target_code_) return true;
        std::unordered_map<Graph, std::pair<Graph, int>, GraphHash> parent;
        parent.emplace(g, std::make_pair(g, -1));
        std::deque<Graph> queue{g};
        while (!queue.empty()) {
            const Graph cur = std::move(queue.front());
            queue.pop_front();
            for (int v = 0; v < cur.order(); ++v) {
                Graph next = local_complement(cur, v);
                if (parent.contains(next)) continue;
                parent.emplace(next, std::make_pair(cur, v));
                if (canonical_code(next) == target_code_) {
                    std::vector<int> moves;
                    for (Graph at = next; parent.at(at).second >= 0; at = parent.at(at).first) {
                        moves.push_back(parent.at(at).second);
                    }
                    std::reverse(moves.begin(), moves.end());
                    for (int m : moves) witness.push_back(step("LC", labels[m]));
                    return true;
                }
                if (parent.size() > options_.orbit_cap) return false;
                queue.push_back(std::move(next));
            }
        }
        return false;
    }

    bool dfs(const Graph& g, const std::vector<int>& labels, VmWitness& witness) {
        if (g.order() == h_.order()) {
            if (!targets_.contains(canonical_code(g))) return false;
            if (finish(g, labels, witness)) return true;
            gave_up_ = true;
            return false;
        }
        const std::string code = canonical_code(g);
        if (failed_.contains(code)) return false;
        if (++expanded_ > options_.node_cap) {
            gave_up_ = true;
            return false;
        }
        for (int v = g.order() - 1; v >= 0; --v) {
            std::vector<int> rest = labels;
            rest.erase(rest.begin() + v);
            const std::size_t mark = witness.size();

            auto attempt = [&](const Graph& reduced) {
                if (options_.prune_by_average && average_cut_rank(reduced) < target_avg_) return false;
                return dfs(reduced, rest, witness);
            };

            witness.push_back(step("DELETE", labels[v]));
            if (attempt(delete_vertex(g, v))) return true;
            witness.resize(mark);

            if (g.degree(v) >= 2) {
                witness.push_back(step("LC", labels[v]));
                witness.push_back(step("DELETE", labels[v]));
                if (attempt(delete_vertex(local_complement(g, v), v))) return true;
                witness.resize(mark);
            }
            for (int u : g.neighbors(v)) {
                witness.push_back("PIVOT " + std::to_string(labels[u]) + " " + std::to_string(labels[v]));
                witness.push_back(step("DELETE", labels[v]));
                if (attempt(delete_vertex(pivot(g, u, v), v))) return true;
                witness.resize(mark);
            }
        }
        failed_.insert(code);
        return false;
    }

    const Graph& h_;
    VmOptions options_;
    std::unordered_set<std::string> targets_;
    bool target_truncated_ = false;
    std::string target_code_;
    Dyadic target_avg_;
    std::unordered_set<std::string> failed_;
    std::size_t expanded_ = 0;
    bool gave_up_ = false;
};

}  // namespace

VmResult is_vertex_minor(const Graph& h, const Graph& g, const VmOptions& options) {
    VmSearch search(h, options);
    return search.run(g);
}

Graph replay_witness(const Graph& host, const VmWitness& steps) {
    Graph g = host;
    std::vector<int> labels(static_cast<std::size_t>(host.order()));
    std::iota(labels.begin(), labels.end(), 0);
    auto index_of = [&](int label) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw ParameterError("witness refers to a deleted or unknown vertex " + std::to_string(label));
        return static_cast<int>(it - labels.begin());
    };
    for (const std::string& s : steps) {
        std::istringstream in(s);
        std::string op;
        in >> op;
        if (op == "LC") {
            int v = -1;
            in >> v;
            g = local_complement(g, index_of(v));
        } else if (op == "PIVOT") {
            int u = -1;
            int v = -1;
            in >> u >> v;
            g = pivot(g, index_of(u), index_of(v));
        } else if (op == "DELETE") {
            int v = -1;
            in >> v;
            const int i = index_of(v);
            g = delete_vertex(g, i);
            labels.erase(labels.begin() + i);
        } else {
            throw ParseError("unknown witness step '" + s + "'", 0);
        }
        if (in.fail()) throw ParseError("malformed witness step '" + s + "'", 0);
    }
    return g;
}

PathVmResult longest_path_vm(const Graph& g, const VmOptions& options) {
    PathVmResult out;
    if (g.order() == 0) return out;
    for (int k = g.order(); k >= 1; --k) {
        const Tri t = is_vertex_minor(path_graph(k), g, options).answer;
        if (t == Tri::True) {
            out.length = k - 1;
            return out;
        }
        if (t == Tri::Indeterminate) out.determinate = Tri::Indeterminate;
    }
    return out;
}

}  // namespace acr
