#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "acr/canonical.hpp"
#include "acr/cutrank.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/local_ops.hpp"
#include "acr/named.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

// Vertex-minor by definition: an induced subgraph of some labeled graph in
// the local-complementation closure.
bool brute_vertex_minor(const Graph& h, const Graph& g) {
    if (h.order() > g.order()) return false;
    const std::string target = canonical_code(h);
    std::unordered_set<Graph, GraphHash> seen{g};
    std::vector<Graph> stack{g};
    while (!stack.empty()) {
        const Graph cur = stack.back();
        stack.pop_back();
        for (Word s = 0; s < (Word{1} << g.order()); ++s) {
            if (std::popcount(s) != h.order()) continue;
            if (canonical_code(induced_subgraph(cur, VertexSet(s))) == target) return true;
        }
        for (int v = 0; v < g.order(); ++v) {
            // Complementing the neighborhood by hand, independent of the library.
            Graph next = cur;
            for (int a : cur.neighbors(v)) {
                for (int b : cur.neighbors(v)) {
                    if (a < b) next.toggle_edge(a, b);
                }
            }
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    return false;
}

}  // namespace

TEST(LocalOps, LocalComplementExamples) {
    for (int v = 0; v < 4; ++v) {
        const Graph s = local_complement(complete_graph(4), v);
        EXPECT_EQ(s.degree(v), 3);
        EXPECT_EQ(s.edge_count(), 3);
    }
    const Graph p4 = path_graph(4);
    EXPECT_EQ(local_complement(p4, 0), p4);
    const Graph c5 = local_complement(cycle_graph(5), 0);
    EXPECT_EQ(c5.edge_count(), 6);
    EXPECT_TRUE(c5.adjacent(1, 4));
    EXPECT_THROW(local_complement(p4, 4), ParameterError);
}

TEST(LocalOps, InvolutionAndPivotIdentities) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n);
        const int v = static_cast<int>(rng() % n);
        ASSERT_EQ(local_complement(local_complement(g, v), v), g);
        for (auto [a, b] : g.edges()) {
            const Graph p = pivot(g, a, b);
            ASSERT_EQ(p, local_complement(local_complement(local_complement(g, b), a), b));
            ASSERT_EQ(p, pivot(g, b, a));
            ASSERT_EQ(pivot(p, a, b), g);
        }
    }
}

TEST(LocalOps, PivotExamples) {
    const Graph p = pivot(path_graph(3), 0, 1);
    EXPECT_EQ(p, Graph::from_edges(3, {{0, 1}, {0, 2}}));
    EXPECT_EQ(pivot(complete_graph(2), 0, 1), complete_graph(2));
    EXPECT_THROW(pivot(path_graph(3), 0, 2), DomainError);
}

TEST(LocalOps, OrbitExamples) {
    const Orbit k4 = orbit(complete_graph(4));
    EXPECT_FALSE(k4.truncated);
    ASSERT_EQ(k4.members.size(), 5u);
    EXPECT_EQ(k4.members[0], complete_graph(4));
    for (std::size_t i = 1; i < 5; ++i) EXPECT_TRUE(are_isomorphic(k4.members[i], star_graph(3)));
    EXPECT_EQ(orbit(complete_graph(2)).members.size(), 1u);
    EXPECT_EQ(orbit(Graph(5)).members.size(), 1u);
    const Orbit cut = orbit(cycle_graph(6), 3);
    EXPECT_TRUE(cut.truncated);
    EXPECT_EQ(cut.members.size(), 3u);
}

TEST(LocalOps, LocalEquivalence) {
    EXPECT_EQ(are_locally_equivalent(complete_graph(4), star_graph(3)), Tri::True);
    EXPECT_EQ(are_locally_equivalent(path_graph(4), star_graph(3)), Tri::False);
    EXPECT_EQ(are_locally_equivalent(cycle_graph(5), cycle_graph(5)), Tri::True);
    EXPECT_EQ(are_locally_equivalent(path_graph(5), cycle_graph(5), 1), Tri::Indeterminate);
}

TEST(LocalOps, OrbitInvariants) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const Orbit o = orbit(g);
        ASSERT_FALSE(o.truncated);
        const auto comps = connected_components(g);
        const Dyadic avg = average_cut_rank(g);
        for (const Graph& m : o.members) {
            ASSERT_EQ(connected_components(m), comps);
            ASSERT_EQ(average_cut_rank(m), avg);
            for (Word s = 0; s < (Word{1} << n); ++s) ASSERT_EQ(cut_rank(m, VertexSet(s)), cut_rank(g, VertexSet(s)));
        }
        const OrbitClasses oc = orbit_classes(g);
        std::set<std::string> codes;
        for (const Graph& m : o.members) codes.insert(canonical_code(m));
        ASSERT_EQ(std::vector<std::string>(codes.begin(), codes.end()), oc.codes);
    }
}

TEST(LocalOps, ElementaryVertexMinors) {
    // At an end vertex the pivot swaps 0 and 1, so deleting 0 afterwards acts
    // like deleting the inner vertex: P3 and K1+K2 both appear.
    const auto end = elementary_vertex_minors(path_graph(4), 0);
    ASSERT_EQ(end.size(), 2u);
    EXPECT_TRUE(are_isomorphic(end[0], path_graph(3)));
    EXPECT_TRUE(are_isomorphic(end[1], disjoint_union(Graph(1), complete_graph(2))));
    const auto inner = elementary_vertex_minors(path_graph(4), 1);
    ASSERT_EQ(inner.size(), 2u);
    EXPECT_TRUE(are_isomorphic(inner[0], disjoint_union(Graph(1), complete_graph(2))));
    EXPECT_TRUE(are_isomorphic(inner[1], path_graph(3)));
    const auto k2 = elementary_vertex_minors(complete_graph(2), 1);
    ASSERT_EQ(k2.size(), 1u);
    EXPECT_EQ(k2[0], Graph(1));
}

TEST(LocalOps, PivotPartnerIsImmaterialUpToLocalEquivalence) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n);
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) < 2) continue;
            const int first = g.neighbors(v).lowest();
            const Graph base = delete_vertex(pivot(g, first, v), v);
            for (int u : g.neighbors(v)) {
                ASSERT_EQ(are_locally_equivalent(base, delete_vertex(pivot(g, u, v), v)), Tri::True)
                    << to_graph6(g) << " v=" << v << " u=" << u;
            }
        }
    }
}

TEST(LocalOps, VertexMinorExamples) {
    const VmResult p3 = is_vertex_minor(path_graph(3), path_graph(4));
    EXPECT_EQ(p3.answer, Tri::True);
    EXPECT_EQ(p3.witness, (VmWitness{"DELETE 3"}));
    EXPECT_EQ(is_vertex_minor(copies(complete_graph(2), 2), path_graph(4)).answer, Tri::False);
    EXPECT_EQ(is_vertex_minor(Graph(1), cycle_graph(5)).answer, Tri::True);
    EXPECT_EQ(is_vertex_minor(path_graph(5), path_graph(4)).answer, Tri::False);
    const VmResult k13 = is_vertex_minor(star_graph(3), complete_graph(4));
    EXPECT_EQ(k13.answer, Tri::True);
    EXPECT_TRUE(are_isomorphic(replay_witness(complete_graph(4), k13.witness), star_graph(3)));
    EXPECT_THROW(replay_witness(path_graph(3), {"DELETE 1", "DELETE 1"}), ParameterError);
}

TEST(LocalOps, VertexMinorAgreesWithDefinition) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % n);
        const Graph g = oracle::random_graph(rng, n);
        const Graph h = oracle::random_graph(rng, k, 0.5);
        const VmResult r = is_vertex_minor(h, g);
        ASSERT_NE(r.answer, Tri::Indeterminate);
        ASSERT_EQ(r.answer == Tri::True, brute_vertex_minor(h, g)) << to_graph6(h) << " in " << to_graph6(g);
        if (r.answer == Tri::True) {
            ASSERT_TRUE(are_isomorphic(replay_witness(g, r.witness), h));
            ASSERT_LE(average_cut_rank(h), average_cut_rank(g));
        }
    }
}

TEST(LocalOps, LongestPathVertexMinor) {
    for (int k = 1; k <= 6; ++k) {
        EXPECT_LE(longest_path_vm(star_graph(k)).length, 2);
        EXPECT_LE(longest_path_vm(complete_graph(k + 1)).length, 2);
    }
    EXPECT_EQ(longest_path_vm(path_graph(6)).length, 5);
    // C5 - v is P4; P5 would need the same average cut-rank as C5.
    EXPECT_EQ(longest_path_vm(cycle_graph(5)).length, 3);
    EXPECT_FALSE(brute_vertex_minor(path_graph(5), cycle_graph(5)));
    EXPECT_NE(average_cut_rank(path_graph(5)), average_cut_rank(cycle_graph(5)));
    EXPECT_EQ(longest_path_vm(Graph(0)).length, 0);
}
