#include "acr/families.hpp"

#include <map>
#include <set>
#include <sstream>

#include "acr/canonical.hpp"
#include "acr/error.hpp"
#include "acr/named.hpp"
#include "acr/parallel.hpp"
#include "acr/structure.hpp"

namespace acr {

namespace {

constexpr int kMaxThresholdExponent = 4096;

struct Split {
    std::vector<VertexSet> components;
    std::vector<Dyadic> averages;
    Dyadic total;
};

Split split_by_component(const Graph& g, const EngineOptions& engine) {
    Split s;
    s.components = connected_components(g);
    for (VertexSet c : s.components) {
        s.averages.push_back(average_cut_rank(induced_subgraph(g, c), engine));
        s.total += s.averages.back();
    }
    return s;
}

int index_in(VertexSet s, int v) { return VertexSet(s.bits() & low_bits(v)).size(); }

std::string describe(const Graph& g) { return forest_canonical_code(g); }

}  // namespace

int base_star_size(const Dyadic& eps) {
    if (eps >= Dyadic::integer(1)) throw ParameterError("eps must lie in [0, 1)");
    return 1 + floor_neg_log2_one_minus(eps);
}

int q1(const Graph& g, const Dyadic& alpha, const EngineOptions& engine) {
    const Dyadic avg = average_cut_rank(g, engine);
    if (avg <= alpha) {
        throw IntegrityError("q1: Eρ = " + avg.to_string() + " is not above " + alpha.to_string() +
                             ", so no threshold exists");
    }
    // Eρ + 1 - 2^-q > alpha + 1  <=>  2^-q < Eρ - alpha
    const Dyadic delta = avg - alpha;
    int q = 1;
    while (!(Dyadic::pow2_inverse(static_cast<unsigned>(q)) < delta)) {
        if (++q > kMaxThresholdExponent) throw IntegrityError("q1: threshold exponent runs past the sanity cap");
    }
    const int d = largest_attached_star(g);
    if (q < d) {
        throw IntegrityError("q1 = " + std::to_string(q) + " is below the largest attached star (" +
                             std::to_string(d) + ") of " + describe(g) + " at alpha " + alpha.to_string());
    }
    return q;
}

int q2(const Graph& g, int v, const Dyadic& alpha, const EngineOptions& engine) {
    if (v < 0 || v >= g.order()) throw ParameterError("q2: vertex out of range");
    const int limit = q1(g, alpha, engine);
    const Split s = split_by_component(g, engine);
    std::size_t ci = 0;
    while (!s.components[ci].contains(v)) ++ci;
    const Graph comp = induced_subgraph(g, s.components[ci]);
    const Dyadic rest = s.total - s.averages[ci];
    const Dyadic target = alpha + Dyadic::integer(1);
    for (int k = 1; k <= limit; ++k) {
        const Dyadic value = rest + average_cut_rank(attach_star(comp, index_in(s.components[ci], v), k), engine);
        if (value > target) {
            if (k < limit - 1) {
                throw IntegrityError("q2 = " + std::to_string(k) + " outside {q1-1, q1} with q1 = " +
                                     std::to_string(limit) + ": Eρ(" + describe(g) + " +_" + std::to_string(v) +
                                     " K_{1," + std::to_string(k) + "}) = " + value.to_string() + " > " +
                                     target.to_string());
            }
            return k;
        }
    }
    throw IntegrityError("q2: Eρ(" + describe(g) + " +_" + std::to_string(v) + " K_{1,q1}) is still at most " +
                         target.to_string() + " with q1 = " + std::to_string(limit));
}

const char* to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Base: return "base";
        case StepKind::AddStar: return "add-star";
        case StepKind::AttachStar: return "attach-star";
    }
    return "?";
}

Graph replay(const std::vector<FamilyStep>& steps) {
    if (steps.empty() || steps.front().kind != StepKind::Base) throw ParameterError("replay: first step must be base");
    Graph g = star_graph(steps.front().size);
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const FamilyStep& s = steps[i];
        switch (s.kind) {
            case StepKind::Base: throw ParameterError("replay: base step after the first");
            case StepKind::AddStar: g = disjoint_union(g, star_graph(s.size)); break;
            case StepKind::AttachStar: g = attach_star(g, s.at, s.size); break;
        }
    }
    return g;
}

Tri in_minimal_class(const Graph& g, const Dyadic& alpha, ThresholdMode mode, const EngineOptions& engine) {
    try {
        const Split s = split_by_component(g, engine);
        if (!exceeds(s.total, alpha, mode)) return Tri::False;
        for (std::size_t i = 0; i < s.components.size(); ++i) {
            const Dyadic rest = s.total - s.averages[i];
            std::set<Graph> seen;
            for (const Reduction& r : elementary_reductions(induced_subgraph(g, s.components[i]))) {
                if (!seen.insert(r.result).second) continue;
                if (exceeds(rest + average_cut_rank(r.result, engine), alpha, mode)) return Tri::False;
            }
        }
        return Tri::True;
    } catch (const CapacityError&) {
        return Tri::Indeterminate;
    }
}

Tri family_minimality_check(const FamilyEntry& entry, const EngineOptions& engine) {
    return in_minimal_class(entry.forest, entry.eps + Dyadic::integer(entry.n), ThresholdMode::AtMost, engine);
}

std::vector<Tri> check_members(const ForestFamily& family, int workers, const EngineOptions& engine) {
    std::vector<Tri> out(family.members.size(), Tri::Indeterminate);
    parallel_for(out.size(), workers, [&](std::size_t i) {
        try {
            out[i] = family_minimality_check(family.members[i], engine);
        } catch (const Error&) {
            out[i] = Tri::Indeterminate;
        }
    });
    return out;
}

ForestFamily build_family(const Dyadic& eps, int n, const FamilyOptions& options) {
    if (n < 0 || n > 5) throw ParameterError("build_family: n must lie in [0, 5]");
    const int s = base_star_size(eps);
    ForestFamily fam{eps, n, {}, false, {}};

    auto verify = [&](const Graph& g, int level) {
        if (!options.verify_preconditions) return Tri::Indeterminate;
        return in_minimal_class(g, eps + Dyadic::integer(level), ThresholdMode::AtMost, options.engine);
    };
    auto finish = [&](std::vector<FamilyEntry>& entries, int level) {
        for (FamilyEntry& e : entries) {
            e.n = level;
            try {
                e.avg = average_cut_rank(e.forest, options.engine);
            } catch (const CapacityError&) {
                e.avg.reset();
            }
        }
    };

    std::vector<FamilyEntry> level{{star_graph(s), {{StepKind::Base, s, -1, Tri::True}}, eps, 0, {}}};
    int at = 0;
    try {
        while (at < n) {
            // level holds F_{eps+at} with at even
            std::vector<FamilyEntry> odd;
            std::vector<std::vector<int>> centers;
            for (const FamilyEntry& f : level) {
                const int q = q1(f.forest, eps + Dyadic::integer(at), options.engine);
                FamilyEntry h{disjoint_union(f.forest, star_graph(q)), f.provenance, eps, at + 1, {}};
                h.provenance.push_back({StepKind::AddStar, q, -1, verify(f.forest, at)});
                odd.push_back(std::move(h));
                centers.push_back(quotient_pi(f.forest).centers);
            }
            if (at + 1 == n) {
                level = std::move(odd);
                at = n;
                break;
            }
            std::vector<FamilyEntry> even;
            for (std::size_t i = 0; i < odd.size(); ++i) {
                const Tri pre = verify(odd[i].forest, at + 1);
                for (int v : centers[i]) {
                    const int q = q2(odd[i].forest, v, eps + Dyadic::integer(at + 1), options.engine);
                    FamilyEntry g{attach_star(odd[i].forest, v, q), odd[i].provenance, eps, at + 2, {}};
                    g.provenance.push_back({StepKind::AttachStar, q, v, pre});
                    even.push_back(std::move(g));
                }
            }
            level = std::move(even);
            at += 2;
        }
    } catch (const CapacityError& e) {
        fam.partial = true;
        std::ostringstream msg;
        msg << "construction stopped after F_{eps+" << at << "}: " << e.what();
        fam.partial_reason = msg.str();
        if (at != n) level.clear();
    }
    finish(level, at == n ? n : at);
    if (at == n) fam.members = std::move(level);
    return fam;
}

StructureCheck check_structure(const Graph& f, int n) {
    StructureCheck r;
    if (!is_forest(f) || has_isolated_vertex(f)) {
        r.ok = false;
        r.problems.push_back("not a forest without isolated vertices");
        return r;
    }
    const WeightedQuotient q = quotient_pi(f);
    r.quotient_order = q.graph.order();
    if (r.quotient_order != n + 1) {
        r.problems.push_back("|π| = " + std::to_string(r.quotient_order) + ", expected " + std::to_string(n + 1));
    }
    const auto comps = connected_components(q.graph);
    std::vector<int> comp_of(static_cast<std::size_t>(q.graph.order()));
    std::vector<int> comp_min(comps.size(), kMaxVertices + 1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (int x : comps[c]) {
            comp_of[x] = static_cast<int>(c);
            comp_min[c] = std::min(comp_min[c], q.weights[x]);
        }
    }
    std::map<int, std::vector<int>> by_weight;
    for (int x = 0; x < q.graph.order(); ++x) by_weight[q.weights[x]].push_back(x);
    for (const auto& [w, xs] : by_weight) {
        if (xs.size() > 2) {
            r.problems.push_back("weight " + std::to_string(w) + " occurs " + std::to_string(xs.size()) + " times");
        } else if (xs.size() == 2) {
            const int a = comp_of[xs[0]];
            const int b = comp_of[xs[1]];
            if (a == b) {
                r.problems.push_back("repeated weight " + std::to_string(w) + " within one component");
            } else if (comp_min[a] != w && comp_min[b] != w) {
                r.problems.push_back("repeated weight " + std::to_string(w) + " is not a component minimum");
            }
        }
    }
    r.ok = r.problems.empty();
    return r;
}

long long double_factorial_odd(int k) {
    long long out = 1;
    for (int j = 2 * k - 1; j > 1; j -= 2) out *= j;
    return out;
}

std::size_t distinct_members(const ForestFamily& family) {
    std::set<std::string> codes;
    for (const FamilyEntry& e : family.members) codes.insert(forest_canonical_code(e.forest));
    return codes.size();
}

FamilyCounts family_counts(const Dyadic& eps, int k, const FamilyOptions& options) {
    if (k < 0 || k > 2) throw ParameterError("family_counts: k must lie in [0, 2]");
    const ForestFamily even = build_family(eps, 2 * k, options);
    const ForestFamily odd = build_family(eps, 2 * k + 1, options);
    FamilyCounts c;
    c.k = k;
    c.even = distinct_members(even);
    c.odd = distinct_members(odd);
    c.expected = double_factorial_odd(k);
    c.partial = even.partial || odd.partial;
    return c;
}

}  // namespace acr
