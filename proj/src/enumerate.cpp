#include "acr/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "acr/canonical.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/parallel.hpp"

namespace acr {

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<Graph>> cache;

std::vector<std::pair<std::string, Graph>> children_of(const Graph& parent) {
    const int m = parent.order();
    const int n = m + 1;
    const std::string parent_code = to_graph6(parent);
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> out;
    for (Word x = 0; x < (Word{1} << m); ++x) {
        Graph g(n);
        for (auto [u, v] : parent.edges()) g.add_edge(u, v);
        g.toggle_row(m, x);
        const std::vector<int> lab = canonical_labeling(g);
        const int last = static_cast<int>(std::find(lab.begin(), lab.end(), m) - lab.begin());
        if (canonical_code(delete_vertex(g, last)) != parent_code) continue;
        Graph canon = relabel(g, lab);
        std::string code = to_graph6(canon);
        if (seen.insert(code).second) out.emplace_back(std::move(code), std::move(canon));
    }
    return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n, int workers) {
    if (n < 0 || n > kEnumerationCap) {
        throw CapacityError("enumerate_graphs: order " + std::to_string(n) + " outside [0, " +
                            std::to_string(kEnumerationCap) + "]");
    }
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<Graph> result;
    if (n == 0) {
        result.emplace_back(0);
    } else {
        const std::vector<Graph>& parents = enumerate_graphs(n - 1, workers);
        std::vector<std::vector<std::pair<std::string, Graph>>> parts(parents.size());
        parallel_for(parents.size(), workers, [&](std::size_t i) { parts[i] = children_of(parents[i]); });
        std::vector<std::pair<std::string, Graph>> all;
        for (auto& p : parts) {
            for (auto& c : p) all.push_back(std::move(c));
        }
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& c : all) result.push_back(std::move(c.second));
    }
    std::lock_guard lock(cache_mutex);
    // std::map nodes are stable, so references handed out earlier stay valid.
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace acr
