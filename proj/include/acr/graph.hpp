#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace acr {

using Word = std::uint64_t;

/// Neighborhoods are single machine words, so graphs hold at most 64 vertices.
inline constexpr int kMaxVertices = 64;

constexpr Word bit(int v) noexcept { return Word{1} << v; }

constexpr Word low_bits(int n) noexcept { return n >= 64 ? ~Word{0} : (Word{1} << n) - 1; }

/// Iterates the indices of set bits of a word in increasing order.
class BitIterator {
public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr BitIterator() = default;
    constexpr explicit BitIterator(Word w) : w_(w) {}

    constexpr int operator*() const noexcept { return std::countr_zero(w_); }
    constexpr BitIterator& operator++() noexcept {
        w_ &= w_ - 1;
        return *this;
    }
    constexpr BitIterator operator++(int) noexcept {
        auto old = *this;
        ++*this;
        return old;
    }
    constexpr bool operator==(const BitIterator&) const = default;

private:
    Word w_ = 0;
};

/// Set of vertices of some graph, stored as a bit mask over [0, 64).
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) bits_ |= bit(v);
    }

    static constexpr VertexSet full(int n) { return VertexSet(low_bits(n)); }

    constexpr Word bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr int lowest() const noexcept { return std::countr_zero(bits_); }

    constexpr void insert(int v) noexcept { bits_ |= bit(v); }
    constexpr void erase(int v) noexcept { bits_ &= ~bit(v); }

    /// Complement relative to [0, n).
    constexpr VertexSet complement(int n) const noexcept { return VertexSet(~bits_ & low_bits(n)); }
    constexpr bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    constexpr BitIterator begin() const noexcept { return BitIterator(bits_); }
    constexpr BitIterator end() const noexcept { return BitIterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    Word bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is symmetric and loop-free; words beyond `order()` are always
/// zero, so defaulted comparison and hashing see only the live rows.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return VertexSet::full(n_); }

    Word row(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet neighbors(int v) const noexcept { return VertexSet(row(v)); }
    bool adjacent(int u, int v) const noexcept { return (row(u) >> v) & 1U; }
    int degree(int v) const noexcept { return std::popcount(row(v)); }

    int edge_count() const noexcept;
    bool has_edge() const noexcept;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    /// XORs `mask` into row v and mirrors the change into the affected rows.
    void toggle_row(int v, Word mask);

    std::size_t hash() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;
    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    std::array<Word, kMaxVertices> adj_{};
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const noexcept { return g.hash(); }
};

// --- construction --------------------------------------------------------

/// Vertices of g2 are renumbered after those of g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Edge-set symmetric difference of g1 and g2 embedded into [0, n) by the given
/// injective vertex maps.
Graph symmetric_difference(const Graph& g1, std::span<const int> embed1, const Graph& g2,
                           std::span<const int> embed2, int n);

/// Induced subgraph on s, renumbered by increasing original index.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);

/// perm[old] = new.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph complement(const Graph& g);

/// Adds K_{1,k} whose center (the first new index) is joined to v.
Graph attach_star(const Graph& g, int v, int k);

// --- structure -----------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
VertexSet isolated_vertices(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Deletes every isolated vertex; the theorems about obstructions assume none.
Graph strip_isolated(const Graph& g);

}  // namespace acr
