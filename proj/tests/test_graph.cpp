#include <gtest/gtest.h>

#include <algorithm>

#include "eog/graph.hpp"
#include "eog/io.hpp"
#include "eog/turan.hpp"
#include "eog/verify.hpp"
#include "oracles.hpp"

using namespace eog;

namespace {

Graph triangle(long long a = 1, long long b = 2, long long c = 3) { return Graph(3, {{0, 1, a}, {1, 2, b}, {0, 2, c}}); }

}  // namespace

TEST(Graph, RejectsMalformedInput) {
    EXPECT_THROW(Graph(2, {{0, 0, 1}}), Error);
    EXPECT_THROW(Graph(2, {{0, 1, 1}, {1, 0, 2}}), Error);
    EXPECT_THROW(Graph(3, {{0, 1, 1}, {1, 2, 1}}), Error);
    EXPECT_THROW(Graph(2, {{0, 2, 1}}), Error);
    EXPECT_THROW(Graph(2, {{0, 1, 1}}, {"a"}), Error);
}

TEST(Graph, EdgesSortedByLabel) {
    const Graph g(3, {{0, 1, 30}, {1, 2, -4}, {0, 2, 7}});
    ASSERT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edge(0).label, -4);
    EXPECT_EQ(g.edge(2).label, 30);
    EXPECT_EQ(g.rank_between(1, 0), 2);
    EXPECT_EQ(g.rank_between(2, 1), 0);
    EXPECT_EQ(g.incident(1), (std::vector<int>{0, 2}));
    const Graph n = g.normalized();
    EXPECT_EQ(n.edge(0).label, 1);
    EXPECT_EQ(n.edge(2).label, 3);
}

TEST(Graph, StructureQueries) {
    EXPECT_TRUE(is_tree(parse_path("P:123")));
    EXPECT_FALSE(is_tree(triangle()));
    const Graph two(4, {{0, 1, 1}, {2, 3, 2}});
    EXPECT_FALSE(is_connected(two));
    EXPECT_TRUE(is_forest(two));
    EXPECT_FALSE(is_tree(two));
    EXPECT_TRUE(is_path(parse_path("P:2413")));
    EXPECT_EQ(degrees(parse_path("P:123")), (std::vector<int>{1, 2, 2, 1}));
}

TEST(Graph, ReverseExamples) {
    EXPECT_TRUE(is_isomorphic(reverse(parse_path("P:213")), parse_path("P:132")));
    EXPECT_TRUE(is_isomorphic(reverse(parse_path("P:123")), parse_path("P:123")));
    EXPECT_TRUE(is_isomorphic(reverse(parse_path("P:21354")), parse_path("P:21354")));
}

TEST(Graph, IsomorphismExamples) {
    EXPECT_TRUE(is_isomorphic(parse_path("P:12"), parse_path("P:21")));
    EXPECT_FALSE(is_isomorphic(parse_path("P:123"), parse_path("P:213")));
    Rng rng(3);
    for (int s = 0; s < 50; ++s) {
        const Graph g = random_graph(rng, 6, 0.5);
        EXPECT_TRUE(is_isomorphic(g, reverse(reverse(g))));
    }
}

TEST(Graph, CanonicalCodeMatchesBruteForceIsomorphism) {
    Rng rng(11);
    std::vector<Graph> pool;
    for (int s = 0; s < 60; ++s) pool.push_back(random_graph(rng, 5, 0.35));
    // Relabelled copies must share the code.
    for (const Graph& g : pool) {
        std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        rng.shuffle(perm);
        std::vector<Edge> es;
        for (const auto& e : g.edges()) es.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.label * 3 + 1});
        const Graph h(g.vertex_count(), es);
        EXPECT_EQ(canonical_code(g), canonical_code(h));
        const auto map = find_isomorphism(g, h);
        ASSERT_EQ(map.size(), static_cast<std::size_t>(g.vertex_count()));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j)
            EXPECT_EQ(canonical_code(pool[i]) == canonical_code(pool[j]), oracle::isomorphic(pool[i], pool[j]))
                << to_text(pool[i]) << "\n" << to_text(pool[j]);
}

TEST(Graph, CloseVertices) {
    const Graph p213 = parse_path("P:213");
    // Path vertices p0..p3; p1 joins the edges labelled 2 and 1, p2 joins 1 and 3.
    EXPECT_TRUE(is_close(p213, 1));
    EXPECT_FALSE(is_close(p213, 2));
    EXPECT_EQ(close_vertices(parse_path("P:123")).size(), 4u);
    EXPECT_EQ(close_vertices(parse_path("P:1")).size(), 2u);
}

TEST(Graph, ConsecutivePairs) {
    const auto pairs = consecutive_pairs(parse_path("P:213"));
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0], (std::pair<int, int>{0, 1}));
    EXPECT_EQ(pairs[1], (std::pair<int, int>{1, 2}));
    EXPECT_TRUE(consecutive_pairs(parse_path("P:1")).empty());
}

TEST(Graph, Bipartitions) {
    const auto bs = bipartitions(parse_path("P:213"));
    ASSERT_EQ(bs.size(), 2u);
    const Bigraph plus = parse_bipath("P:+213");
    const Bigraph minus = parse_bipath("P:-213");
    EXPECT_TRUE((is_isomorphic(bs[0], plus) && is_isomorphic(bs[1], minus)) ||
                (is_isomorphic(bs[0], minus) && is_isomorphic(bs[1], plus)));
    EXPECT_TRUE(bipartitions(triangle(5, 1, 9)).empty());
    const auto edge = bipartitions(parse_path("P:1"));
    ASSERT_EQ(edge.size(), 2u);
    EXPECT_TRUE(is_isomorphic(edge[0].swapped(), edge[1]));
    EXPECT_THROW(bipartitions(Graph(4, {{0, 1, 1}, {2, 3, 2}})), Error);
}

TEST(Graph, BigraphIsomorphismRespectsSides) {
    EXPECT_FALSE(is_isomorphic(parse_bipath("P:+213"), parse_bipath("P:-213")));
    EXPECT_TRUE(is_isomorphic(parse_bipath("P:+12"), parse_bipath("P:+21")));
}

TEST(Io, PathSpecs) {
    const Graph p = parse_path("P:123");
    EXPECT_EQ(p.vertex_count(), 4);
    EXPECT_EQ(path_ranks(p), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(parse_path("P:1").vertex_count(), 2);
    const Bigraph b = parse_bipath("P:+132");
    EXPECT_EQ(b.side(0), Side::Right);
    EXPECT_EQ(path_spec(b.graph()), "P:132");
    EXPECT_EQ(parse_path("P:1,2,10,3,4,5,6,7,8,9").edge_count(), 10);
    EXPECT_THROW(parse_path("P:1,2,10,3"), Error);
    EXPECT_THROW(parse_path("P:+12"), Error);
    EXPECT_THROW(parse_bipath("P:12"), Error);
    EXPECT_THROW(parse_path("P:11"), Error);
    EXPECT_THROW(parse_path("Q:12"), Error);
}

TEST(Io, TextRoundTrip) {
    Rng rng(5);
    for (int s = 0; s < 30; ++s) {
        const Bigraph b = random_bigraph(rng, 12);
        const AnyGraph back = parse_graph_text(to_text(b));
        ASSERT_TRUE(std::holds_alternative<Bigraph>(back));
        EXPECT_TRUE(is_isomorphic(std::get<Bigraph>(back), b));
        const Graph g = random_graph(rng, 7, 0.4);
        const AnyGraph gb = parse_graph_text(to_text(g));
        ASSERT_TRUE(std::holds_alternative<Graph>(gb));
        EXPECT_TRUE(is_isomorphic(std::get<Graph>(gb), g));
    }
}

TEST(Io, GraphFileSyntax) {
    const AnyGraph g = parse_graph_text("# comment\nV iso\na b 10\nb c 5\n\nc d 7\n");
    const Graph& u = underlying(g);
    EXPECT_EQ(u.vertex_count(), 5);
    EXPECT_EQ(path_spec(u.without_isolated()), "P:312");
    EXPECT_THROW(parse_graph_text("a b\n"), Error);
    EXPECT_THROW(parse_graph_text("a b 1\nb a 2\n"), Error);
    EXPECT_THROW(parse_graph_text("L a\nL b\na b 1\n"), Error);
}
