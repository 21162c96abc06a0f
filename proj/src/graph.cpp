#include "acr/graph.hpp"

#include <string>

#include "acr/error.hpp"

namespace acr {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw ParameterError("vertex out of range: " + std::to_string(u) + "-" + std::to_string(v) +
                             " in graph of order " + std::to_string(n_));
    }
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] ^= bit(v);
    adj_[v] ^= bit(u);
}

void Graph::toggle_row(int v, Word mask) {
    mask &= low_bits(n_) & ~bit(v);
    adj_[v] ^= mask;
    for (int u : VertexSet(mask)) adj_[u] ^= bit(v);
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool Graph::has_edge() const noexcept {
    for (int v = 0; v < n_; ++v) {
        if (adj_[v]) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : VertexSet(row(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

std::size_t Graph::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n_);
    for (int v = 0; v < n_; ++v) {
        h ^= adj_[v] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    if (n1 + g2.order() > kMaxVertices) {
        throw CapacityError("disjoint union would have " + std::to_string(n1 + g2.order()) +
                            " vertices (limit 64)");
    }
    Graph g(n1 + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    return g;
}

namespace {

void check_embedding(std::span<const int> embed, int source_order, int n) {
    if (static_cast<int>(embed.size()) != source_order) {
        throw ParameterError("embedding size does not match graph order");
    }
    Word seen = 0;
    for (int x : embed) {
        if (x < 0 || x >= n) throw ParameterError("embedding target out of range");
        if (seen & bit(x)) throw ParameterError("embedding is not injective");
        seen |= bit(x);
    }
}

}  // namespace

Graph symmetric_difference(const Graph& g1, std::span<const int> embed1, const Graph& g2,
                           std::span<const int> embed2, int n) {
    check_embedding(embed1, g1.order(), n);
    check_embedding(embed2, g2.order(), n);
    Graph g(n);
    for (auto [u, v] : g1.edges()) g.toggle_edge(embed1[u], embed1[v]);
    for (auto [u, v] : g2.edges()) g.toggle_edge(embed2[u], embed2[v]);
    return g;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    s = s & g.vertices();
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (int v : s) index[v] = k++;
    Graph h(k);
    for (int v : s) {
        for (int u : g.neighbors(v) & s) {
            if (u > v) h.add_edge(index[v], index[u]);
        }
    }
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    VertexSet s = g.vertices();
    s.erase(v);
    return induced_subgraph(g, s);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    check_embedding(perm, g.order(), g.order());
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) h.add_edge(u, v);
        }
    }
    return h;
}

Graph attach_star(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.order()) throw ParameterError("attach_star: vertex out of range");
    if (k < 0) throw ParameterError("attach_star: negative star size");
    if (g.order() + k + 1 > kMaxVertices) {
        throw CapacityError("attach_star: result exceeds 64 vertices");
    }
    Graph h = disjoint_union(g, Graph(k + 1));
    const int center = g.order();
    h.add_edge(v, center);
    for (int i = 1; i <= k; ++i) h.add_edge(center, center + i);
    return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    Word remaining = low_bits(g.order());
    while (remaining) {
        Word comp = remaining & (~remaining + 1);
        Word frontier = comp;
        while (frontier) {
            Word next = 0;
            for (int v : VertexSet(frontier)) next |= g.row(v);
            frontier = next & ~comp;
            comp |= frontier;
        }
        out.emplace_back(comp);
        remaining &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
    return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.order();
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v) {
        if (g.row(v) == 0) s.insert(v);
    }
    return s;
}

bool has_isolated_vertex(const Graph& g) { return !isolated_vertices(g).empty(); }

Graph strip_isolated(const Graph& g) { return induced_subgraph(g, g.vertices() - isolated_vertices(g)); }

}  // namespace acr
