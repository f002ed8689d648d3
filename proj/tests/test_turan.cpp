#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "eog/io.hpp"
#include "eog/turan.hpp"
#include "eog/verify.hpp"
#include "oracles.hpp"

using namespace eog;

namespace {

Graph star(int k) {
    std::vector<Edge> es;
    for (int i = 1; i <= k; ++i) es.push_back({0, i, i});
    return Graph(k + 1, es);
}

void expect_sound(int n, const Graph& h, const TuranResult& r) {
    EXPECT_EQ(r.witness.edge_count(), r.value);
    EXPECT_LE(r.witness.vertex_count(), n);
    EXPECT_FALSE(oracle::contains(r.witness, h)) << to_text(r.witness);
}

}  // namespace

TEST(Turan, MatchingExample) {
    const auto r = exact_ex(4, parse_path("P:12"));
    EXPECT_EQ(r.value, 2);
    EXPECT_EQ(r.status, SearchStatus::Exact);
    expect_sound(4, parse_path("P:12"), r);
}

TEST(Turan, AgreesWithBruteForceUpToFourVertices) {
    const std::vector<Graph> patterns{parse_path("P:12"),  parse_path("P:123"), parse_path("P:132"),
                                      parse_path("P:213"), parse_path("P:2143"), parse_path("P:1423"),
                                      star(2),              star(3),              Graph(3, {{0, 1, 1}, {1, 2, 3}, {0, 2, 2}})};
    for (const Graph& h : patterns)
        for (int n = 1; n <= 4; ++n) {
            const auto r = exact_ex(n, h);
            EXPECT_EQ(r.status, SearchStatus::Exact);
            EXPECT_EQ(r.value, oracle::extremal(n, h)) << to_text(h) << " n=" << n;
            expect_sound(n, h, r);
        }
}

TEST(Turan, AgreesWithBruteForceAtFiveVertices) {
    for (const char* spec : {"P:12", "P:123", "P:132"}) {
        const Graph h = parse_path(spec);
        const auto r = exact_ex(5, h);
        EXPECT_EQ(r.value, oracle::extremal(5, h)) << spec;
        expect_sound(5, h, r);
    }
}

TEST(Turan, CompleteGraphValues) {
    for (const char* spec : {"P:1423", "P:2413"}) {
        const auto r = exact_ex(5, parse_path(spec));
        EXPECT_EQ(r.value, 10) << spec;
        EXPECT_EQ(r.status, SearchStatus::Exact);
        expect_sound(5, parse_path(spec), r);
    }
    const auto r = exact_ex(6, parse_path("P:15243"));
    EXPECT_EQ(r.value, 15);
    expect_sound(6, parse_path("P:15243"), r);
}

TEST(Turan, ThreadCountDoesNotChangeResults) {
    for (const char* spec : {"P:123", "P:2143", "P:1342"}) {
        Budget one, four;
        one.threads = 1;
        four.threads = 4;
        const auto a = exact_ex(6, parse_path(spec), one);
        const auto b = exact_ex(6, parse_path(spec), four);
        EXPECT_EQ(a.value, b.value) << spec;
        EXPECT_EQ(a.nodes, b.nodes) << spec;
        EXPECT_EQ(to_text(a.witness), to_text(b.witness)) << spec;
    }
}

TEST(Turan, BudgetExhaustionIsReported) {
    Budget tiny;
    tiny.nodes = 5;
    tiny.threads = 1;
    const Graph h = parse_path("P:12345");
    const auto r = exact_ex(7, h, tiny);
    EXPECT_EQ(r.status, SearchStatus::LowerBoundOnly);
    EXPECT_FALSE(oracle::contains(r.witness, h));
    EXPECT_EQ(r.witness.edge_count(), r.value);
}

TEST(Turan, RejectsBadInput) {
    EXPECT_THROW(exact_ex(0, parse_path("P:12")), Error);
    EXPECT_THROW(exact_ex(3, Graph(2, {})), Error);
}

TEST(Turan, PendantExtension) {
    const Graph h = parse_path("P:123");
    const Graph far = pendant_extension(h, PendantEnd::End1);
    EXPECT_TRUE(is_isomorphic(far, parse_path("P:1234")));
    const Graph inner = pendant_extension(h, PendantEnd::End2);
    EXPECT_EQ(inner.vertex_count(), 5);
    EXPECT_EQ(inner.edge_count(), 4);
    EXPECT_FALSE(is_path(inner));
    // The new edge is the smallest and hangs off the inner end of the old smallest edge.
    const Edge& e = inner.edge(0);
    EXPECT_TRUE(inner.degree(e.u) == 1 || inner.degree(e.v) == 1);
    EXPECT_EQ(std::max(inner.degree(e.u), inner.degree(e.v)), 3);
    Rng rng(1);
    for (int s = 0; s < 20; ++s) {
        Graph t;
        do t = random_graph(rng, 5, 0.5); while (t.empty());
        for (PendantEnd end : {PendantEnd::End1, PendantEnd::End2}) {
            const Graph x = pendant_extension(t, end);
            EXPECT_EQ(x.edge_count(), t.edge_count() + 1);
            EXPECT_EQ(x.vertex_count(), t.vertex_count() + 1);
        }
    }
}

TEST(Turan, Table1RowsCoverEveryFiveEdgePath) {
    const auto& rows = table1_rows();
    ASSERT_EQ(rows.size(), 32u);
    std::vector<Graph> reps;
    for (const auto& r : rows) {
        std::vector<long long> labels;
        for (char ch : r.labels) labels.push_back(ch - '0');
        reps.push_back(make_path(labels));
    }
    auto same = [](const Graph& a, const Graph& b) {
        return oracle::isomorphic(a, b) || oracle::isomorphic(reverse(a), b);
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(same(reps[i], reps[j])) << rows[i].labels << " " << rows[j].labels;
    std::vector<long long> p{1, 2, 3, 4, 5};
    do {
        const Graph g = make_path(p);
        EXPECT_TRUE(std::any_of(reps.begin(), reps.end(), [&](const Graph& r) { return same(g, r); }));
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<int, int> by_chi;
    for (const auto& r : rows) ++by_chi[r.chromatic];
    EXPECT_EQ(by_chi[2], 12);
    EXPECT_EQ(by_chi[3], 2);
    EXPECT_EQ(by_chi[0], 18);
}

TEST(Turan, Table1ReportLabelsGroundTruth) {
    Budget b;
    const auto entries = table1_report(5, b, {"12345", "15243", "13254"});
    ASSERT_EQ(entries.size(), 3u);
    std::map<std::string, Table1Entry> by;
    for (const auto& e : entries) by[e.row.labels] = e;
    for (const auto& e : entries) {
        ASSERT_EQ(e.values.size(), 5u);
        for (std::size_t k = 0; k < e.values.size(); ++k) {
            const int n = static_cast<int>(k) + 1;
            EXPECT_EQ(e.values[k].value, n * (n - 1) / 2);
        }
    }
    EXPECT_EQ(by["12345"].verdict, GrowthClass::Linear);
    EXPECT_EQ(by["12345"].ground_truth, "no published ground truth");
    EXPECT_EQ(by["15243"].ground_truth, "C(n,2)");
    EXPECT_FALSE(by["15243"].ocn2);
    EXPECT_EQ(by["13254"].verdict, GrowthClass::OmegaNLogN);
    EXPECT_TRUE(by["13254"].ocn2);
    const std::string csv = table1_csv(entries);
    EXPECT_NE(csv.find("no published ground truth"), std::string::npos);
}

TEST(Turan, K33Sampler) {
    const Graph g = k33_canonical_graph(9, false);
    EXPECT_EQ(g.vertex_count(), 9);
    EXPECT_EQ(g.edge_count(), 27);
    // The nine smallest edges join v_i (3..5) to w_j (6..8) in the order 3i + j.
    for (int k = 0; k < 9; ++k) {
        const Edge& e = g.edge(k);
        const int v = std::min(e.u, e.v) - 3, w = std::max(e.u, e.v) - 6;
        EXPECT_EQ(3 * v + w, k);
    }
    const Graph top = k33_canonical_graph(9, true);
    for (int k = 18; k < 27; ++k) {
        const Edge& e = top.edge(k);
        EXPECT_GE(std::min(e.u, e.v), 3);
    }
    EXPECT_TRUE(oracle::contains(g, parse_path("P:21354")));
    const auto r = k33_canonical_sample(7, 25);
    EXPECT_EQ(r.samples, 25);
    EXPECT_EQ(r.containing, 25);
    EXPECT_DOUBLE_EQ(r.rate(), 1.0);
}

TEST(Turan, EnumerationSmallCases) {
    int edges_only = 0;
    enumerate_eogs(2, 1, [&](const Graph& g) {
        edges_only += g.edge_count() == 1;
        return true;
    });
    EXPECT_EQ(edges_only, 1);
    int triangles = 0;
    enumerate_eogs(3, 3, [&](const Graph& g) {
        triangles += g.edge_count() == 3;
        return true;
    });
    EXPECT_EQ(triangles, 1);
}

TEST(Turan, EnumerationMatchesBruteForceQuotient) {
    const int n = 4, m_max = 3;
    std::vector<Graph> reps;
    enumerate_eogs(n, m_max, [&](const Graph& g) {
        EXPECT_EQ(g.vertex_count(), n);
        reps.push_back(g);
        return true;
    });
    // Every labelled edge-ordered graph on four vertices with at most three edges.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> all;
    std::vector<Edge> cur;
    std::vector<char> used(pairs.size(), 0);
    std::function<void()> rec = [&] {
        all.emplace_back(n, cur);
        if (static_cast<int>(cur.size()) == m_max) return;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            cur.push_back({pairs[i].first, pairs[i].second, static_cast<long long>(cur.size())});
            rec();
            cur.pop_back();
            used[i] = 0;
        }
    };
    rec();
    std::vector<Graph> classes;
    for (const Graph& g : all)
        if (std::none_of(classes.begin(), classes.end(), [&](const Graph& c) { return oracle::isomorphic(c, g); }))
            classes.push_back(g);
    EXPECT_EQ(reps.size(), classes.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(oracle::isomorphic(reps[i], reps[j]));
}

TEST(Turan, BigraphEnumerationCounts) {
    std::map<int, long long> count;
    enumerate_bigraphs(5, [&](const Bigraph& b) {
        ++count[b.edge_count()];
        for (int v = 0; v < b.vertex_count(); ++v) EXPECT_GT(b.graph().degree(v), 0);
        return true;
    });
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(count[m], static_cast<long long>(oracle::bigraph_classes(m).size())) << m;
    EXPECT_EQ(count[4], 113);
}

TEST(Turan, RngIsTheRawStream) {
    Rng rng(5489);
    EXPECT_EQ(rng.next(), 14514284786278117030ULL);
    Rng a(3);
    for (int i = 0; i < 1000; ++i) EXPECT_LT(a.below(7), 7u);
    std::vector<int> v(10);
    std::iota(v.begin(), v.end(), 0);
    Rng b(3);
    b.shuffle(v);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
}
