#include "acr/obstructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acr/canonical.hpp"
#include "acr/cutrank.hpp"
#include "acr/enumerate.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/local_ops.hpp"
#include "acr/parallel.hpp"

namespace acr {

const char* to_string(ThresholdMode mode) { return mode == ThresholdMode::AtMost ? "le" : "lt"; }

bool exceeds(const Dyadic& value, const Dyadic& alpha, ThresholdMode mode) {
    return mode == ThresholdMode::AtMost ? value > alpha : value >= alpha;
}

namespace {

const char* kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::Delete: return "G-v";
        case ReductionKind::LcDelete: return "(G*v)-v";
        case ReductionKind::PivotDelete: return "(G^uv)-v";
    }
    return "?";
}

// The first elementary reduction still above the threshold, if any.
std::optional<std::pair<Reduction, Dyadic>> reduction_above(const Graph& g, const Dyadic& alpha, ThresholdMode mode) {
    for (Reduction& r : elementary_reductions(g)) {
        Dyadic a = average_cut_rank(r.result);
        if (exceeds(a, alpha, mode)) return std::make_pair(std::move(r), std::move(a));
    }
    return std::nullopt;
}

std::string describe(const Reduction& r) {
    std::string s = std::string(kind_name(r.kind)) + " at v=" + std::to_string(r.v);
    if (r.u >= 0) s += ", u=" + std::to_string(r.u);
    return s;
}

}  // namespace

ObstructionReport obstructions(const Dyadic& alpha, ThresholdMode mode, int n_max, const ObstructionOptions& options) {
    if (n_max < 0 || n_max > 8) throw CapacityError("obstructions: n_max must lie in [0, 8]");
    ObstructionReport report;
    report.alpha = alpha;
    report.mode = mode;
    report.n_max = n_max;

    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Graph>& graphs = enumerate_graphs(n, options.workers);
        std::vector<std::optional<Dyadic>> hit(graphs.size());
        parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
            const Graph& g = graphs[i];
            if (has_isolated_vertex(g)) return;
            Dyadic a = average_cut_rank(g);
            if (!exceeds(a, alpha, mode)) return;
            if (reduction_above(g, alpha, mode)) return;
            hit[i] = std::move(a);
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (hit[i]) report.members.push_back({to_graph6(graphs[i]), graphs[i], *hit[i], 0});
        }
    }

    // Group by local equivalence; the class key is its least canonical code.
    std::vector<OrbitClasses> orbits(report.members.size());
    parallel_for(report.members.size(), options.workers,
                 [&](std::size_t i) { orbits[i] = orbit_classes(report.members[i].graph); });
    std::map<std::pair<int, std::string>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < report.members.size(); ++i) {
        groups[{report.members[i].graph.order(), orbits[i].codes.front()}].push_back(i);
    }
    std::vector<ObstructionMember> ordered;
    for (const auto& [key, idx] : groups) {
        ObstructionClass c;
        c.id = static_cast<int>(report.classes.size());
        c.representative = key.second;
        c.order = key.first;
        c.avg = report.members[idx.front()].avg;
        for (std::size_t i : idx) {
            c.members.push_back(report.members[i].canon);
            c.orbit_truncated = c.orbit_truncated || orbits[i].truncated;
            ObstructionMember m = report.members[i];
            m.class_id = c.id;
            ordered.push_back(std::move(m));
            if (report.members[i].avg != c.avg) {
                report.violations.push_back("class " + c.representative + " mixes average cut-rank values");
            }
        }
        std::sort(c.members.begin(), c.members.end());
        report.classes.push_back(std::move(c));
    }
    report.members = std::move(ordered);

    const BigInt whole = alpha.floor();
    if (whole <= 4) report.size_bound = x_sequence(alpha.frac(), whole.convert_to<int>());
    for (const auto& m : report.members) {
        if (report.size_bound > 0 && BigInt(m.graph.order()) >= report.size_bound) {
            report.violations.push_back(m.canon + " reaches the proven size bound");
        }
    }

    if (options.post_check) {
        // Graphs one vertex smaller and above the threshold must not be
        // vertex-minors of any member. This pass uses the vertex-minor search
        // without cut-rank pruning, so it does not lean on monotonicity.
        std::map<int, std::vector<std::pair<Graph, OrbitClasses>>> above;
        for (const auto& m : report.members) {
            const int k = m.graph.order() - 1;
            if (k < 1 || above.contains(k)) continue;
            const std::vector<Graph>& smaller = enumerate_graphs(k, options.workers);
            std::vector<std::optional<OrbitClasses>> oc(smaller.size());
            parallel_for(smaller.size(), options.workers, [&](std::size_t i) {
                if (exceeds(average_cut_rank(smaller[i]), alpha, mode)) oc[i] = orbit_classes(smaller[i]);
            });
            auto& list = above[k];
            for (std::size_t i = 0; i < smaller.size(); ++i) {
                if (oc[i]) list.emplace_back(smaller[i], std::move(*oc[i]));
            }
        }
        std::vector<std::string> found(report.members.size());
        parallel_for(report.members.size(), options.workers, [&](std::size_t i) {
            const auto& m = report.members[i];
            auto it = above.find(m.graph.order() - 1);
            if (it == above.end()) return;
            for (const auto& [h, oc] : it->second) {
                VmOptions vo;
                vo.prune_by_average = false;
                vo.target_classes = &oc;
                const Tri t = is_vertex_minor(h, m.graph, vo).answer;
                if (t != Tri::False) {
                    found[i] = m.canon + ": " + to_graph6(h) + " above the threshold is a vertex-minor (" +
                               to_string(t) + ")";
                    return;
                }
            }
        });
        for (auto& f : found) {
            if (!f.empty()) report.violations.push_back(std::move(f));
        }
    }
    report.post_check_ok = report.violations.empty();
    return report;
}

std::vector<DiffEntry> diff_against(const ObstructionReport& report, const std::vector<Graph>& expected) {
    std::vector<DiffEntry> out;
    std::set<int> matched;
    for (const Graph& e : expected) {
        DiffEntry d;
        d.canon = canonical_code(e);
        d.avg = average_cut_rank(e);
        const OrbitClasses oc = orbit_classes(e);
        const auto cls = std::find_if(report.classes.begin(), report.classes.end(), [&](const ObstructionClass& c) {
            return c.order == e.order() && c.representative == oc.codes.front();
        });
        if (cls != report.classes.end()) {
            d.status = "matched";
            d.reason = "class " + cls->representative;
            matched.insert(cls->id);
        } else {
            d.status = "missing";
            if (e.order() > report.n_max) {
                d.reason = "order " + std::to_string(e.order()) + " above n_max";
            } else if (has_isolated_vertex(e)) {
                d.reason = "has an isolated vertex";
            } else if (!exceeds(d.avg, report.alpha, report.mode)) {
                d.reason = std::string("Erho = ") + d.avg.to_string() +
                           (report.mode == ThresholdMode::AtMost ? " is not above " : " is below ") +
                           report.alpha.to_string();
            } else if (auto r = reduction_above(e, report.alpha, report.mode)) {
                d.reason = "not minimal: " + describe(r->first) + " gives " + to_graph6(r->first.result) +
                           " with Erho = " + r->second.to_string();
            } else {
                d.reason = "qualifies but was not enumerated";
            }
        }
        out.push_back(std::move(d));
    }
    for (const auto& c : report.classes) {
        if (matched.contains(c.id)) continue;
        out.push_back({c.representative, c.avg, "extra",
                       "Erho = " + c.avg.to_string() + "; every elementary reduction is " +
                           (report.mode == ThresholdMode::AtMost ? "at most " : "below ") + report.alpha.to_string()});
    }
    return out;
}

std::vector<Graph> max_cutrank_obstructions(int k, int n_max, int workers) {
    if (n_max < 0 || n_max > kEnumerationCap) throw CapacityError("max_cutrank_obstructions: n_max out of range");
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Graph>& graphs = enumerate_graphs(n, workers);
        std::vector<char> hit(graphs.size(), 0);
        parallel_for(graphs.size(), workers, [&](std::size_t i) {
            const Graph& g = graphs[i];
            if (max_cut_rank(g) <= k) return;
            for (int v = 0; v < n; ++v) {
                if (max_cut_rank(delete_vertex(g, v)) > k) return;
            }
            hit[i] = 1;
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (hit[i]) out.push_back(graphs[i]);
        }
    }
    return out;
}

int floor_neg_log2_one_minus(const Dyadic& t) {
    const Dyadic one = Dyadic::integer(1);
    if (t >= one) throw DomainError("floor_neg_log2_one_minus: argument must be below 1");
    // 1 - t = r / 2^s; the answer is the largest j with r <= 2^{s-j}.
    const Dyadic rest = one - t;
    const BigInt& r = rest.num();
    const unsigned top = static_cast<unsigned>(boost::multiprecision::msb(r));
    const unsigned ceil_log = (r & (r - 1)) == 0 ? top : top + 1;
    return static_cast<int>(rest.exp()) - static_cast<int>(ceil_log);
}

BigInt x_sequence(const Dyadic& eps, int n) {
    if (eps >= Dyadic::integer(1)) throw DomainError("x_sequence: eps must lie in [0, 1)");
    if (n < 0) throw ParameterError("x_sequence: n must be nonnegative");
    BigInt x = std::max<BigInt>(2 + floor_neg_log2_one_minus(eps), 5);
    for (int i = 1; i <= n; ++i) {
        // frac(2^{x-1} eps) vanishes once x - 1 >= exp(eps).
        Dyadic t;
        if (x - 1 < eps.exp()) t = eps.scaled(static_cast<int>(x - 1)).frac();
        x = (x + 1 + floor_neg_log2_one_minus(t)) << (8 * i + 10);
    }
    return x;
}

std::vector<CensusEntry> value_census(int n_max, const Dyadic& cap, int workers) {
    std::map<Dyadic, std::string> seen;
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<Graph>& graphs = enumerate_graphs(n, workers);
        std::vector<Dyadic> values(graphs.size());
        parallel_for(graphs.size(), workers, [&](std::size_t i) { values[i] = average_cut_rank(graphs[i]); });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (values[i] <= cap && !seen.contains(values[i])) seen.emplace(values[i], to_graph6(graphs[i]));
        }
    }
    std::vector<CensusEntry> out;
    for (auto& [v, w] : seen) out.push_back({v, w});
    return out;
}

std::optional<Dyadic> gap_after(const Dyadic& alpha, int n_max, int workers) {
    // No cap on the census: the next value may exceed any fixed bound.
    std::optional<Dyadic> best;
    for (int n = 0; n <= n_max; ++n) {
        const std::vector<Graph>& graphs = enumerate_graphs(n, workers);
        std::vector<Dyadic> values(graphs.size());
        parallel_for(graphs.size(), workers, [&](std::size_t i) { values[i] = average_cut_rank(graphs[i]); });
        for (const Dyadic& v : values) {
            if (v > alpha && (!best || v < *best)) best = v;
        }
    }
    return best;
}

Dyadic three_halves_value(const std::string& family, int k) {
    const Dyadic three_halves(BigInt(3), 1);
    if (family == "1-1/2^k") return Dyadic::integer(1) - Dyadic::pow2_inverse(static_cast<unsigned>(k));
    if (family == "3/2-1/2^(k+1)") return three_halves - Dyadic::pow2_inverse(static_cast<unsigned>(k + 1));
    if (family == "3/2-3/2^(k+2)") return three_halves - Dyadic(BigInt(3), static_cast<unsigned>(k + 2));
    if (family == "3/2") return three_halves;
    throw ParameterError("unknown value family '" + family + "'");
}

std::vector<ValueSetMember> three_halves_membership(const Dyadic& value) {
    std::vector<ValueSetMember> out;
    const Dyadic three_halves(BigInt(3), 1);
    if (value > three_halves) return out;
    if (value == three_halves) out.push_back({"3/2", 0});
    const std::vector<std::string> families{"1-1/2^k", "3/2-1/2^(k+1)", "3/2-3/2^(k+2)"};
    // A value with denominator 2^q can only be the member with k <= q.
    const int limit = static_cast<int>(value.exp()) + 2;
    for (const auto& f : families) {
        for (int k = 0; k <= limit; ++k) {
            if (three_halves_value(f, k) == value) out.push_back({f, k});
        }
    }
    return out;
}

}  // namespace acr
