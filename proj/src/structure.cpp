#include "acr/structure.hpp"

#include <algorithm>
#include <numeric>

#include "acr/error.hpp"

namespace acr {

bool are_twins(const Graph& g, int x, int y) {
    if (x == y) return false;
    const Word mask = ~(bit(x) | bit(y));
    return (g.row(x) & mask) == (g.row(y) & mask);
}

std::vector<VertexSet> twin_classes(const Graph& g) {
    std::vector<VertexSet> classes;
    Word assigned = 0;
    for (int x = 0; x < g.order(); ++x) {
        if (assigned & bit(x)) continue;
        VertexSet c{x};
        for (int y = x + 1; y < g.order(); ++y) {
            if (!(assigned & bit(y)) && are_twins(g, x, y)) c.insert(y);
        }
        assigned |= c.bits();
        classes.push_back(c);
    }
    return classes;
}

const char* to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::AttachedStar: return "attached-star";
        case ClassKind::TrueTwinClique: return "true-twin-clique";
        case ClassKind::FalseTwinIndependent: return "false-twin-independent";
    }
    return "?";
}

int EquivPartition::class_of(int v) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].members.contains(v)) return static_cast<int>(i);
    }
    return -1;
}

bool cut_rank_equivalent(const Graph& g, int x, int y) {
    if (x == y) return true;
    if (are_twins(g, x, y)) return true;
    if (g.row(x) == bit(y)) return true;
    if (g.row(y) == bit(x)) return true;
    return false;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

EquivClass classify(const Graph& g, VertexSet members) {
    const int first = members.lowest();
    if (members.size() == 1) return {members, ClassKind::TrueTwinClique, first};
    for (int x : members) {
        if (g.degree(x) != 1) continue;
        const int y = g.neighbors(x).lowest();
        if (!members.contains(y)) continue;
        int center = y;
        // K2 class: both ends are leaves, the lower index is the center.
        if (members.size() == 2 && g.degree(y) == 1) center = first;
        return {members, ClassKind::AttachedStar, center};
    }
    const int second = (members - VertexSet{first}).lowest();
    const bool clique = g.adjacent(first, second);
    return {members, clique ? ClassKind::TrueTwinClique : ClassKind::FalseTwinIndependent, first};
}

}  // namespace

EquivPartition equiv_classes(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (cut_rank_equivalent(g, x, y)) {
                const int rx = find_root(parent, x);
                const int ry = find_root(parent, y);
                if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
            }
        }
    }
    std::vector<Word> by_root(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) by_root[find_root(parent, v)] |= bit(v);
    EquivPartition out;
    for (int v = 0; v < n; ++v) {
        if (by_root[v]) out.classes.push_back(classify(g, VertexSet(by_root[v])));
    }
    return out;
}

WeightedQuotient quotient_pi(const Graph& f) {
    if (!is_forest(f)) throw DomainError("quotient_pi: graph is not a forest");
    if (has_isolated_vertex(f)) throw DomainError("quotient_pi: forest has an isolated vertex");
    const EquivPartition part = equiv_classes(f);
    const int k = static_cast<int>(part.classes.size());
    WeightedQuotient q;
    q.graph = Graph(k);
    for (int i = 0; i < k; ++i) {
        const auto& c = part.classes[i];
        q.weights.push_back(c.members.size());
        q.centers.push_back(c.center);
        q.classes.push_back(c.members);
    }
    for (int i = 0; i < k; ++i) {
        Word reach = 0;
        for (int v : part.classes[i].members) reach |= f.row(v);
        for (int j = i + 1; j < k; ++j) {
            if (reach & part.classes[j].members.bits()) q.graph.add_edge(i, j);
        }
    }
    return q;
}

int largest_attached_star(const Graph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (int c = 0; c < g.order(); ++c) {
        int leaves = 0;
        for (int u : g.neighbors(c)) leaves += g.degree(u) == 1 ? 1 : 0;
        best = std::max(best, 1 + leaves);
    }
    return best;
}

}  // namespace acr
