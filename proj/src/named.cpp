#include "acr/named.hpp"

#include <charconv>

#include "acr/error.hpp"

namespace acr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ParameterError(what);
}

int param(std::span<const int> params, std::size_t i, const char* family) {
    if (params.size() <= i) throw ParameterError(std::string("missing parameter for family ") + family);
    return params[i];
}

Graph with_pendants(Graph base, std::initializer_list<int> hosts) {
    Graph g = disjoint_union(base, Graph(static_cast<int>(hosts.size())));
    int next = base.order();
    for (int h : hosts) g.add_edge(h, next++);
    return g;
}

}  // namespace

Graph path_graph(int k) {
    require(k >= 1, "path needs k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int k) {
    require(k >= 3, "cycle needs k >= 3");
    Graph g = path_graph(k);
    g.add_edge(k - 1, 0);
    return g;
}

Graph complete_graph(int k) {
    require(k >= 1, "complete graph needs k >= 1");
    Graph g(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph complete_bipartite(int m, int k) {
    require(m >= 1 && k >= 1, "complete bipartite graph needs m, k >= 1");
    Graph g(m + k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) g.add_edge(i, m + j);
    }
    return g;
}

Graph star_graph(int k) {
    require(k >= 0, "star needs k >= 0");
    Graph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

Graph e_graph(int k) {
    require(k >= 0, "E_k needs k >= 0");
    Graph g = star_graph(k + 1);
    // Leaf k+1 becomes the midpoint of the subdivided edge 0-(k+1)-(k+2).
    g = disjoint_union(g, Graph(1));
    g.add_edge(k + 1, k + 2);
    return g;
}

Graph copies(const Graph& g, int m) {
    require(m >= 0, "copy count must be nonnegative");
    Graph out;
    for (int i = 0; i < m; ++i) out = disjoint_union(out, g);
    return out;
}

Graph make_named(Family family, std::span<const int> params) {
    switch (family) {
        case Family::Path: return path_graph(param(params, 0, "P"));
        case Family::Cycle: return cycle_graph(param(params, 0, "C"));
        case Family::Complete: return complete_graph(param(params, 0, "K"));
        case Family::CompleteBipartite:
            return complete_bipartite(param(params, 0, "K_{m,k}"), param(params, 1, "K_{m,k}"));
        case Family::Star: return star_graph(param(params, 0, "K_{1,k}"));
        case Family::E: return e_graph(param(params, 0, "E"));
        case Family::Edgeless: {
            const int k = param(params, 0, "edgeless");
            require(k >= 0, "edgeless graph needs k >= 0");
            return Graph(k);
        }
        case Family::P41: return with_pendants(path_graph(4), {1, 2});
        case Family::P51: return with_pendants(path_graph(5), {1});
        case Family::P52: return with_pendants(path_graph(5), {2});
        case Family::C31: return with_pendants(complete_graph(3), {0, 1, 2});
        case Family::C41: return with_pendants(cycle_graph(4), {0, 2});
    }
    throw ParameterError("unknown graph family");
}

namespace {

std::vector<int> parse_ints(std::string_view s, std::size_t offset) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::string_view part = s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos);
        int value = 0;
        const auto* begin = part.data();
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (part.empty() || ec != std::errc{} || ptr != end) {
            throw ParseError("bad integer list in graph name", offset + pos);
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Graph parse_term(std::string_view term, std::size_t offset) {
    std::size_t i = 0;
    int multiplicity = 1;
    while (i < term.size() && term[i] >= '0' && term[i] <= '9') ++i;
    if (i > 0) {
        multiplicity = parse_ints(term.substr(0, i), offset)[0];
        term.remove_prefix(i);
        offset += i;
    }
    if (term.empty()) throw ParseError("empty graph name", offset);
    const char head = term[0];
    const std::vector<int> p = parse_ints(term.substr(1), offset + 1);
    Graph g;
    try {
        if (head == 'P' && p.size() == 1) g = path_graph(p[0]);
        else if (head == 'P' && p.size() == 2 && p[0] == 4 && p[1] == 1) g = make_named(Family::P41);
        else if (head == 'P' && p.size() == 2 && p[0] == 5 && p[1] == 1) g = make_named(Family::P51);
        else if (head == 'P' && p.size() == 2 && p[0] == 5 && p[1] == 2) g = make_named(Family::P52);
        else if (head == 'C' && p.size() == 1) g = cycle_graph(p[0]);
        else if (head == 'C' && p.size() == 2 && p[0] == 3 && p[1] == 1) g = make_named(Family::C31);
        else if (head == 'C' && p.size() == 2 && p[0] == 4 && p[1] == 1) g = make_named(Family::C41);
        else if (head == 'K' && p.size() == 1) g = complete_graph(p[0]);
        else if (head == 'K' && p.size() == 2 && p[0] == 1) g = star_graph(p[1]);
        else if (head == 'K' && p.size() == 2) g = complete_bipartite(p[0], p[1]);
        else if (head == 'E' && p.size() == 1) g = e_graph(p[0]);
        else if (head == 'N' && p.size() == 1) g = Graph(p[0]);
        else throw ParseError("unknown graph name", offset);
    } catch (const ParameterError& e) {
        throw ParseError(e.what(), offset);
    }
    return copies(g, multiplicity);
}

}  // namespace

Graph parse_named(std::string_view name) {
    Graph out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t plus = name.find('+', pos);
        const auto term = name.substr(pos, plus == std::string_view::npos ? name.npos : plus - pos);
        out = disjoint_union(out, parse_term(term, pos));
        if (plus == std::string_view::npos) break;
        pos = plus + 1;
    }
    return out;
}

}  // namespace acr
