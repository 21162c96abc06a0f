#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "acr/canonical.hpp"
#include "acr/error.hpp"
#include "acr/graph_io.hpp"
#include "acr/named.hpp"
#include "oracles.hpp"

using namespace acr;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

Graph cube() {
    Graph g(8);
    for (int v = 0; v < 8; ++v) {
        for (int b = 0; b < 3; ++b) {
            const int u = v ^ (1 << b);
            if (u > v) g.add_edge(v, u);
        }
    }
    return g;
}

}  // namespace

TEST(Canonical, Examples) {
    const Graph p4 = path_graph(4);
    const std::vector<int> rev{3, 2, 1, 0};
    EXPECT_EQ(canonical_code(p4), canonical_code(relabel(p4, rev)));
    EXPECT_NE(canonical_code(p4), canonical_code(star_graph(3)));
    EXPECT_EQ(canonical_form(cycle_graph(5)).aut_count, 10u);
    EXPECT_FALSE(are_isomorphic(p4, star_graph(3)));
    EXPECT_TRUE(are_isomorphic(cycle_graph(6), relabel(cycle_graph(6), std::vector<int>{2, 4, 0, 1, 5, 3})));
}

TEST(Canonical, AutomorphismCounts) {
    EXPECT_EQ(automorphism_count(Graph(0)), 1u);
    EXPECT_EQ(automorphism_count(Graph(1)), 1u);
    EXPECT_EQ(automorphism_count(Graph(7)), 5040u);
    EXPECT_EQ(automorphism_count(complete_graph(8)), 40320u);
    EXPECT_EQ(automorphism_count(complete_bipartite(3, 4)), 144u);
    EXPECT_EQ(automorphism_count(complete_bipartite(3, 3)), 72u);
    EXPECT_EQ(automorphism_count(petersen()), 120u);
    EXPECT_EQ(automorphism_count(cube()), 48u);
    EXPECT_EQ(automorphism_count(path_graph(7)), 2u);
    EXPECT_EQ(automorphism_count(copies(complete_graph(2), 4)), 384u);
    // 16! still fits in 64 bits.
    EXPECT_EQ(automorphism_count(Graph(16)), 20922789888000u);
    EXPECT_EQ(canonical_form(complete_graph(16)).aut_count, 20922789888000u);
}

TEST(Canonical, ClassesMatchBruteForce) {
    for (int n = 0; n <= 6; ++n) {
        std::map<std::vector<int>, std::string> brute_to_canon;
        std::set<std::string> canons;
        for (std::uint64_t code = 0; code < (1ULL << oracle::pair_count(n)); ++code) {
            // Classes are closed under relabeling, so a sample of labelings per
            // class checks both directions at n = 6.
            if (n == 6 && code % 7 != 0) continue;
            const Graph g = oracle::labeled_graph(n, code);
            const oracle::BruteCanon b = oracle::brute_canon(g);
            const CanonicalForm f = canonical_form(g);
            ASSERT_EQ(f.aut_count, b.automorphisms) << to_graph6(g);
            auto [it, fresh] = brute_to_canon.emplace(b.code, f.canon);
            ASSERT_EQ(it->second, f.canon) << to_graph6(g);
            if (fresh) ASSERT_TRUE(canons.insert(f.canon).second) << to_graph6(g);
            ASSERT_EQ(relabel(g, f.labeling), parse_graph6(f.canon));
        }
        if (n <= 5) {
            const std::size_t expected[] = {1, 1, 2, 4, 11, 34};
            EXPECT_EQ(canons.size(), expected[n]);
        }
    }
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(rng, n, p);
        const CanonicalForm a = canonical_form(g);
        const CanonicalForm b = canonical_form(shuffled(g, rng));
        ASSERT_EQ(a.canon, b.canon) << to_graph6(g);
        ASSERT_EQ(a.aut_count, b.aut_count) << to_graph6(g);
    }
    for (const Graph& g : {petersen(), cube(), copies(cycle_graph(4), 4), complete_bipartite(8, 8)}) {
        EXPECT_EQ(canonical_code(g), canonical_code(shuffled(g, rng)));
    }
}

TEST(Canonical, ColoredCodesRespectColors) {
    const Graph p3 = path_graph(3);
    const std::vector<int> a{1, 2, 1};
    const std::vector<int> b{1, 1, 2};
    const std::vector<int> c{2, 1, 1};
    EXPECT_NE(colored_canonical_code(p3, a), colored_canonical_code(p3, b));
    EXPECT_EQ(colored_canonical_code(p3, b), colored_canonical_code(p3, c));
    EXPECT_EQ(automorphism_count(p3, a), 2u);
    EXPECT_EQ(automorphism_count(p3, b), 1u);
}

TEST(Canonical, Cap) { EXPECT_THROW(canonical_code(Graph(17)), CapacityError); }

TEST(Canonical, ForestCodesMatchIsomorphism) {
    std::mt19937_64 rng(8);
    std::vector<Graph> forests;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        Graph f(n);
        for (int v = 1; v < n; ++v) {
            if (rng() % 4) f.add_edge(v, static_cast<int>(rng() % v));
        }
        forests.push_back(f);
    }
    for (std::size_t i = 0; i < forests.size(); ++i) {
        EXPECT_EQ(forest_canonical_code(forests[i]), forest_canonical_code(shuffled(forests[i], rng)));
        for (std::size_t j = i + 1; j < std::min(forests.size(), i + 40); ++j) {
            EXPECT_EQ(forest_canonical_code(forests[i]) == forest_canonical_code(forests[j]),
                      are_isomorphic(forests[i], forests[j]));
        }
    }
    EXPECT_THROW(forest_canonical_code(cycle_graph(3)), DomainError);
    // Works above the canonical cap.
    EXPECT_EQ(forest_canonical_code(path_graph(40)), forest_canonical_code(shuffled(path_graph(40), rng)));
}
