#include "acr/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "acr/error.hpp"
#include "acr/graph_io.hpp"

namespace acr {

namespace {

// Ordered partition of the vertices; each cell is a bit mask.
using Cells = std::vector<Word>;

// Upper triangle in graph6 order, most significant bit first, so comparing the
// words compares the graph6 strings.
using Code = std::array<Word, 2>;

void refine(const Graph& g, Cells& cells) {
    for (;;) {
        bool split = false;
        for (std::size_t s = 0; s < cells.size() && !split; ++s) {
            const Word w = cells[s];
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const Word cell = cells[c];
                if (std::popcount(cell) == 1) continue;
                std::array<Word, kMaxVertices + 1> by_count{};
                int lo = kMaxVertices;
                int hi = 0;
                for (int v : VertexSet(cell)) {
                    const int k = std::popcount(g.row(v) & w);
                    by_count[k] |= bit(v);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                if (lo == hi) continue;
                Cells parts;
                for (int k = lo; k <= hi; ++k) {
                    if (by_count[k]) parts.push_back(by_count[k]);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                split = true;
                break;
            }
        }
        if (!split) return;
    }
}

// First cell of least size above one, or -1 when the partition is discrete.
int target_cell(const Cells& cells) {
    int best = -1;
    int size = kMaxVertices + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int k = std::popcount(cells[i]);
        if (k > 1 && k < size) {
            best = static_cast<int>(i);
            size = k;
        }
    }
    return best;
}

Cells individualize(const Graph& g, const Cells& cells, int target, int v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (i == target) {
            out.push_back(bit(v));
            out.push_back(cells[i] & ~bit(v));
        } else {
            out.push_back(cells[i]);
        }
    }
    refine(g, out);
    return out;
}

std::vector<int> shape(const Cells& cells) {
    std::vector<int> s;
    for (Word c : cells) s.push_back(std::popcount(c));
    return s;
}

class Canonizer {
public:
    Canonizer(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
        if (n_ > kCanonicalCap) {
            throw CapacityError("canonical form: " + std::to_string(n_) + " vertices exceeds the cap of " +
                                std::to_string(kCanonicalCap));
        }
        if (!colors.empty() && static_cast<int>(colors.size()) != n_) {
            throw ParameterError("canonical form: color list length differs from graph order");
        }
        std::map<int, Word> by_color;
        for (int v = 0; v < n_; ++v) by_color[colors.empty() ? 0 : colors[v]] |= bit(v);
        for (const auto& [c, mask] : by_color) root_.push_back(mask);
        refine(g_, root_);
    }

    void run() {
        std::vector<int> path;
        search(root_, path);
    }

    const std::vector<int>& best_order() const { return best_order_; }

    std::uint64_t automorphism_count() {
        if (!have_first_) run();
        std::uint64_t total = 1;
        Cells cells = root_;
        std::vector<int> prefix;
        for (std::size_t depth = 0; depth < first_path_.size(); ++depth) {
            const int t = target_cell(cells);
            const int v = first_path_[depth];
            Word confirmed = bit(v);
            Word rejected = 0;
            for (int w : VertexSet(cells[t] & ~bit(v))) {
                if (same_orbit(confirmed, w, prefix)) {
                    confirmed |= bit(w);
                    continue;
                }
                if (same_orbit(rejected, w, prefix)) continue;
                prefix.push_back(w);
                const bool found = find_first_equivalent(individualize(g_, cells, t, w), prefix);
                prefix.pop_back();
                if (found) {
                    confirmed |= bit(w);
                } else {
                    rejected |= bit(w);
                }
            }
            total *= static_cast<std::uint64_t>(std::popcount(confirmed));
            cells = individualize(g_, cells, t, v);
            prefix.push_back(v);
        }
        return total;
    }

private:
    std::vector<int> order_of(const Cells& cells) const {
        std::vector<int> order;
        order.reserve(cells.size());
        for (Word c : cells) order.push_back(std::countr_zero(c));
        return order;
    }

    Code code_of(const std::vector<int>& order) const {
        Code code{};
        int k = 0;
        for (int j = 1; j < n_; ++j) {
            const Word row = g_.row(order[j]);
            for (int i = 0; i < j; ++i, ++k) {
                if ((row >> order[i]) & 1U) code[k >> 6] |= Word{1} << (63 - (k & 63));
            }
        }
        return code;
    }

    void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
        generators_.push_back(std::move(gamma));
    }

    // Whether w lies in the orbit of some vertex of `reps` under the stored
    // automorphisms that fix every vertex of `fixed`.
    bool same_orbit(Word reps, int w, const std::vector<int>& fixed) const {
        if (!reps) return false;
        std::array<int, kMaxVertices> parent;
        std::iota(parent.begin(), parent.begin() + n_, 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : generators_) {
            bool fixes = true;
            for (int f : fixed) fixes = fixes && gamma[f] == f;
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(gamma[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        const int rw = find(w);
        for (int u : VertexSet(reps)) {
            if (find(u) == rw) return true;
        }
        return false;
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        int k = 0;
        while (k < static_cast<int>(std::min(a.size(), b.size())) && a[k] == b[k]) ++k;
        return k;
    }

    // Returns the depth to unwind to, or -1 to keep going.
    int search(const Cells& cells, std::vector<int>& path) {
        const int t = target_cell(cells);
        if (t < 0) return leaf(cells, path);
        const int depth = static_cast<int>(path.size());
        if (!have_first_) first_shapes_.push_back(shape(cells));
        Word explored = 0;
        for (int w : VertexSet(cells[t])) {
            if (same_orbit(explored, w, path)) continue;
            explored |= bit(w);
            path.push_back(w);
            const int jump = search(individualize(g_, cells, t, w), path);
            path.pop_back();
            if (jump >= 0 && jump < depth) return jump;
        }
        return -1;
    }

    int leaf(const Cells& cells, const std::vector<int>& path) {
        std::vector<int> order = order_of(cells);
        const Code code = code_of(order);
        if (!have_first_) {
            have_first_ = true;
            first_order_ = best_order_ = order;
            first_code_ = best_code_ = code;
            first_path_ = best_path_ = path;
            return -1;
        }
        if (code == first_code_) {
            add_automorphism(first_order_, order);
            return common_prefix(path, first_path_);
        }
        if (code == best_code_) {
            add_automorphism(best_order_, order);
            return common_prefix(path, best_path_);
        }
        if (code < best_code_) {
            best_order_ = std::move(order);
            best_code_ = code;
            best_path_ = path;
        }
        return -1;
    }

    // Whether the subtree below `cells` holds a leaf with the first leaf's code.
    // Nodes whose cell sizes differ from the first path at the same depth
    // cannot lead there.
    bool find_first_equivalent(const Cells& cells, std::vector<int>& path) {
        const std::size_t depth = path.size();
        const int t = target_cell(cells);
        if (t < 0) {
            std::vector<int> order = order_of(cells);
            if (code_of(order) != first_code_) return false;
            add_automorphism(first_order_, order);
            return true;
        }
        if (depth >= first_shapes_.size() || shape(cells) != first_shapes_[depth]) return false;
        Word failed = 0;
        for (int w : VertexSet(cells[t])) {
            if (same_orbit(failed, w, path)) continue;
            path.push_back(w);
            const bool found = find_first_equivalent(individualize(g_, cells, t, w), path);
            path.pop_back();
            if (found) return true;
            failed |= bit(w);
        }
        return false;
    }

    const Graph& g_;
    int n_;
    Cells root_;
    bool have_first_ = false;
    std::vector<int> first_order_, best_order_, first_path_, best_path_;
    Code first_code_{}, best_code_{};
    std::vector<std::vector<int>> first_shapes_;
    std::vector<std::vector<int>> generators_;
};

std::vector<int> labeling_from_order(const std::vector<int>& order) {
    std::vector<int> labeling(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) labeling[order[i]] = static_cast<int>(i);
    return labeling;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors) {
    Canonizer c(g, colors);
    c.run();
    return labeling_from_order(c.best_order());
}

std::string canonical_code(const Graph& g) { return to_graph6(relabel(g, canonical_labeling(g))); }

std::string colored_canonical_code(const Graph& g, std::span<const int> colors) {
    const std::vector<int> labeling = canonical_labeling(g, colors);
    std::vector<int> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    std::string out;
    for (int c : sorted) out += std::to_string(c) + ",";
    return out + "|" + to_graph6(relabel(g, labeling));
}

CanonicalForm canonical_form(const Graph& g) {
    Canonizer c(g, {});
    c.run();
    CanonicalForm f;
    f.labeling = labeling_from_order(c.best_order());
    f.canon = to_graph6(relabel(g, f.labeling));
    f.aut_count = c.automorphism_count();
    return f;
}

std::uint64_t automorphism_count(const Graph& g, std::span<const int> colors) {
    Canonizer c(g, colors);
    c.run();
    return c.automorphism_count();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_code(g) == canonical_code(h);
}

namespace {

std::string rooted_code(const Graph& f, int v, int parent) {
    std::vector<std::string> children;
    for (int u : f.neighbors(v)) {
        if (u != parent) children.push_back(rooted_code(f, u, v));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    return out + ")";
}

std::vector<int> tree_centers(const Graph& f, VertexSet tree) {
    std::array<int, kMaxVertices> deg{};
    Word layer = 0;
    for (int v : tree) {
        deg[v] = f.degree(v);
        if (deg[v] <= 1) layer |= bit(v);
    }
    Word remaining = tree.bits();
    while (std::popcount(remaining) > 2) {
        remaining &= ~layer;
        Word next = 0;
        for (int v : VertexSet(layer)) {
            for (int u : VertexSet(f.row(v) & remaining)) {
                if (--deg[u] == 1) next |= bit(u);
            }
        }
        layer = next;
    }
    return VertexSet(remaining).to_vector();
}

}  // namespace

std::string forest_canonical_code(const Graph& f) {
    if (!is_forest(f)) throw DomainError("forest_canonical_code: graph is not a forest");
    std::vector<std::string> trees;
    for (VertexSet comp : connected_components(f)) {
        std::string best;
        for (int c : tree_centers(f, comp)) {
            std::string code = rooted_code(f, c, -1);
            if (best.empty() || code < best) best = std::move(code);
        }
        trees.push_back(std::move(best));
    }
    std::sort(trees.begin(), trees.end());
    std::string out;
    for (const auto& t : trees) out += t;
    return out;
}

}  // namespace acr
