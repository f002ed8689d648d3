#include "eog/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eog/classify.hpp"
#include "eog/containment.hpp"
#include "eog/io.hpp"
#include "eog/leaning.hpp"
#include "eog/matrix01.hpp"

namespace eog {

namespace {

constexpr std::size_t kKeptFailures = 20;

template <class Serialize>
void expect(VerifyReport& rep, bool ok, const std::string& what, Serialize&& ser) {
    if (!ok) rep.fail(what, ser());
}

double uniform(Rng& rng) { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; }

std::vector<long long> shuffled_labels(Rng& rng, std::size_t m) {
    std::vector<long long> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    rng.shuffle(labels);
    return labels;
}

Graph relabel_vertices(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        es.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)], e.label});
    return Graph(g.vertex_count(), std::move(es));
}

// Isomorphism by trying every bijection.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int r = 0; r < a.edge_count() && ok; ++r) {
            const Edge& e = a.edge(r);
            ok = b.rank_between(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]) == r;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != a.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (int r = 0; r < a.edge_count(); ++r) {
        const Edge& e = a.edge(r);
        if (b.rank_between(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]) != r) return false;
    }
    return true;
}

// Number of order-preserving embeddings, by trying every injective map.
long long brute_embedding_count(const Graph& g, const Graph& h, const std::vector<Side>* gs = nullptr,
                                const std::vector<Side>* hs = nullptr) {
    const int k = h.vertex_count(), n = g.vertex_count();
    if (k > n) return 0;
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    long long count = 0;
    std::function<void(int)> go = [&](int a) {
        if (a == k) {
            int prev = -1;
            for (const Edge& e : h.edges()) {
                int r = g.rank_between(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
                if (r <= prev) return;
                prev = r;
            }
            ++count;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            if (gs && (*gs)[static_cast<std::size_t>(w)] != (*hs)[static_cast<std::size_t>(a)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            map[static_cast<std::size_t>(a)] = w;
            go(a + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    go(0);
    return count;
}

std::string label_list(const std::vector<int>& p) {
    std::string s = "P:";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.size() >= 10 && i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

// Bigraph grown edge by edge in increasing label order, skipping edges that
// would complete one of the patterns.
Bigraph random_avoider(Rng& rng, int nl, int nr, const std::vector<Bigraph>& patterns) {
    std::vector<Side> sides(static_cast<std::size_t>(nl), Side::Left);
    sides.resize(static_cast<std::size_t>(nl + nr), Side::Right);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < nl; ++x)
        for (int y = nl; y < nl + nr; ++y) pairs.emplace_back(x, y);
    rng.shuffle(pairs);
    std::vector<Edge> es;
    for (auto [x, y] : pairs) {
        es.push_back({x, y, static_cast<long long>(es.size() + 1)});
        Bigraph b(Graph(nl + nr, es), sides);
        for (const Bigraph& p : patterns)
            if (contains(b, p)) {
                es.pop_back();
                break;
            }
    }
    return Bigraph(Graph(nl + nr, es), sides);
}

// Visits every tree with 1..m edges once up to isomorphism.
void for_each_tree(int m, const std::function<void(const Graph&)>& visit) {
    enumerate_eogs(m + 1, m, [&](const Graph& g) {
        if (!is_forest(g)) return false;
        if (g.edge_count() > 0) {
            Graph t = g.without_isolated();
            if (is_connected(t)) visit(t);
        }
        return true;
    });
}

}  // namespace

void VerifyReport::fail(std::string check, std::string counterexample) {
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back({std::move(check), std::move(counterexample)});
}

void VerifyReport::margin(const std::string& bound, long long limit, long long value) {
    auto it = std::find_if(margins.begin(), margins.end(), [&](const BoundMargin& m) { return m.bound == bound; });
    if (it == margins.end()) {
        margins.push_back({bound, 0, limit - value});
        it = margins.end() - 1;
    }
    ++it->instances;
    it->worst_slack = std::min(it->worst_slack, limit - value);
    if (value > limit) fail(bound + " violated", std::to_string(value) + " > " + std::to_string(limit));
}

Bigraph random_bigraph(Rng& rng, int max_vertices) {
    const int half = std::max(1, max_vertices / 2);
    const int nl = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(half)));
    const int nr = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(half)));
    const double p = 0.05 + 0.9 * uniform(rng);
    std::vector<Edge> es;
    for (int x = 0; x < nl; ++x)
        for (int y = nl; y < nl + nr; ++y)
            if (uniform(rng) < p) es.push_back({x, y, 0});
    auto labels = shuffled_labels(rng, es.size());
    for (std::size_t i = 0; i < es.size(); ++i) es[i].label = labels[i];
    std::vector<Side> sides(static_cast<std::size_t>(nl), Side::Left);
    sides.resize(static_cast<std::size_t>(nl + nr), Side::Right);
    return Bigraph(Graph(nl + nr, std::move(es)), std::move(sides));
}

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform(rng) < p) es.push_back({u, v, 0});
    auto labels = shuffled_labels(rng, es.size());
    for (std::size_t i = 0; i < es.size(); ++i) es[i].label = labels[i];
    return Graph(n, std::move(es));
}

Graph random_tree(Rng& rng, int m) {
    if (m < 1) throw Error("a random tree needs at least one edge");
    const int n = m + 1;
    std::vector<Edge> es;
    if (n == 2) {
        es.push_back({0, 1, 1});
        return Graph(2, std::move(es));
    }
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    for (int c : code) {
        int leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        es.push_back({leaf, c, 0});
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(c)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) a = v;
            else es.push_back({a, v, 0});
        }
    auto labels = shuffled_labels(rng, es.size());
    for (std::size_t i = 0; i < es.size(); ++i) es[i].label = labels[i];
    return Graph(n, std::move(es));
}

VerifyReport verify_core(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "core";
    Rng rng(opt.seed);
    for (int s = 0; s < opt.samples; ++s) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const Graph g = random_graph(rng, n, uniform(rng));
        ++rep.instances;
        auto ser = [&] { return to_text(g); };
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        rng.shuffle(perm);
        const Graph h = relabel_vertices(g, perm);
        expect(rep, canonical_code(g) == canonical_code(h), "canonical code changes under relabelling", ser);
        expect(rep, is_isomorphism(g, h, find_isomorphism(g, h)), "find_isomorphism result is not an isomorphism", ser);
        expect(rep, is_isomorphic(reverse(reverse(g)), g), "double reversal is not the identity", ser);
        expect(rep, is_isomorphic(underlying(parse_graph_text(to_text(g))), g), "text round trip changes the graph", ser);
        if (g.edge_count() >= 2) {
            // Swap two labels: isomorphic exactly when brute force says so.
            std::vector<Edge> es = g.edges();
            const auto i = static_cast<std::size_t>(rng.below(es.size()));
            const auto j = static_cast<std::size_t>(rng.below(es.size()));
            std::swap(es[i].label, es[j].label);
            const Graph g2(n, es);
            expect(rep, is_isomorphic(g, g2) == brute_isomorphic(g, g2), "is_isomorphic disagrees with brute force", ser);
        }
        const Bigraph b = random_bigraph(rng, 10);
        if (b.edge_count() > 0 && is_connected(b.graph().without_isolated()) &&
            b.graph().without_isolated().vertex_count() == b.vertex_count()) {
            auto parts = bipartitions(b.graph());
            expect(rep, parts.size() == 2, "connected bipartite graph without two bipartitions", [&] { return to_text(b); });
        }
    }
    return rep;
}

VerifyReport verify_containment(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "containment";
    Rng rng(opt.seed + 1);
    for (int s = 0; s < opt.samples; ++s) {
        const Graph g = random_graph(rng, 2 + static_cast<int>(rng.below(5)), 0.3 + 0.6 * uniform(rng));
        const Graph h = random_tree(rng, 1 + static_cast<int>(rng.below(3)));
        ++rep.instances;
        auto ser = [&] { return to_text(g) + "# pattern\n" + to_text(h); };
        const auto all = enumerate_embeddings(g, h);
        expect(rep, static_cast<long long>(all.size()) == brute_embedding_count(g, h), "embedding count differs from brute force", ser);
        expect(rep, contains(g, h) == !all.empty(), "contains disagrees with enumeration", ser);
        for (const auto& e : all) expect(rep, is_valid_embedding(g, h, e), "invalid embedding", ser);

        const Bigraph bg = random_bigraph(rng, 8);
        std::vector<long long> labels(1 + rng.below(3));
        std::iota(labels.begin(), labels.end(), 1);
        rng.shuffle(labels);
        const Bigraph bh = make_signed_path(labels, rng.coin());
        auto bser = [&] { return to_text(bg) + "# pattern\n" + to_text(bh); };
        const auto ball = enumerate_embeddings(bg, bh);
        expect(rep,
               static_cast<long long>(ball.size()) == brute_embedding_count(bg.graph(), bh.graph(), &bg.sides(), &bh.sides()),
               "bigraph embedding count differs from brute force", bser);
        for (const auto& e : ball) expect(rep, is_valid_embedding(bg, bh, e), "invalid bigraph embedding", bser);
    }
    return rep;
}

VerifyReport verify_semi(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "semi";
    for_each_tree(opt.tree_edges, [&](const Graph& t) {
        if (!ocn2_forest_test(t)) return;
        ++rep.instances;
        expect(rep, is_semi_caterpillar(t) == semi_via_forbidden_paths(t),
               "semi-caterpillar test disagrees with the forbidden path test", [&] { return to_text(t); });
    });
    return rep;
}

VerifyReport verify_equivalence(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "equivalence";
    enumerate_bigraphs(opt.tree_edges, [&](const Bigraph& b) {
        if (!is_forest(b.graph())) return false;
        if (!is_connected(b.graph())) return true;
        ++rep.instances;
        auto ser = [&] { return to_text(b); };
        const bool rc = is_right_caterpillar(b);
        const auto seq = peel_extensions(b);
        const auto greedy = peel_extensions_greedy(b);
        expect(rep, rc == seq.has_value(), "right caterpillar test disagrees with peeling", ser);
        expect(rep, rc == greedy.has_value(), "right caterpillar test disagrees with greedy peeling", ser);
        if (seq) {
            expect(rep, is_isomorphic(replay(*seq), b), "replayed extensions differ from the input", ser);
            expect(rep, greedy && seq->depth() <= greedy->depth(), "minimal peeling deeper than greedy peeling", ser);
        }
        if (greedy) expect(rep, is_isomorphic(replay(*greedy), b), "replayed greedy extensions differ from the input", ser);
        if (is_semi_caterpillar(b.graph()))
            expect(rep, alt_right_caterpillar_check(b) == rc, "bridge-edge criterion disagrees", ser);
        return true;
    });
    return rep;
}

VerifyReport verify_main(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "main";
    for_each_tree(opt.tree_edges, [&](const Graph& t) {
        ++rep.instances;
        auto ser = [&] { return to_text(t); };
        const auto v = classify_connected(t);
        expect(rep, check_verdict(t, v), "verdict evidence does not check out", ser);
        expect(rep, classify_connected(reverse(t)).growth == v.growth, "growth class not reverse invariant", ser);
    });
    // Every path with 2..6 edges: templates against the general classifier.
    for (int k = 2; k <= 6; ++k) {
        std::vector<int> p(static_cast<std::size_t>(k));
        std::iota(p.begin(), p.end(), 1);
        do {
            ++rep.instances;
            try {
                const Graph g = parse_path(label_list(p));
                expect(rep, check_verdict(g, classify_path(g)), "path verdict evidence does not check out",
                       [&] { return label_list(p); });
            } catch (const std::logic_error& e) {
                rep.fail(e.what(), label_list(p));
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }
    for (const Table1Row& row : table1_rows()) {
        ++rep.instances;
        const Graph g = parse_path("P:" + row.labels);
        auto ser = [&] { return "P:" + row.labels; };
        expect(rep, classify_path(g).growth == row.expected, "table class mismatch", ser);
        expect(rep, ocn2_forest_test(g).has_value() == (row.chromatic == 2), "order chromatic number 2 flag mismatch", ser);
    }
    Rng rng(opt.seed + 2);
    for (int s = 0; s < opt.samples; ++s) {
        const Graph g = random_graph(rng, 3 + static_cast<int>(rng.below(5)), 0.3 + 0.7 * uniform(rng)).without_isolated();
        if (g.edge_count() == 0 || !is_connected(g)) continue;
        ++rep.instances;
        const auto v = classify_connected(g);
        expect(rep, check_verdict(g, v), "verdict evidence does not check out", [&] { return to_text(g); });
        if (!is_forest(g))
            expect(rep, v.growth == GrowthClass::OmegaNLogN, "graph with a cycle classified linear", [&] { return to_text(g); });
    }
    return rep;
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void leaning_bounds(VerifyReport& rep, const Bigraph& b) {
    ++rep.instances;
    const long long n = b.vertex_count();
    auto ser = [&] { return to_text(b); };
    for (int c = 1; c <= 3; ++c) {
        const auto left = iterate(b, c, 3, Lean::Left);
        const auto right = iterate(b, c, 3, Lean::Right);
        const auto non = non_leaning_edges(b, c);
        rep.margin("non-leaning <= 2cn", 2 * c * n, static_cast<long long>(non.size()));
        for (int i = 1; i <= 3; ++i) {
            const auto& l = left.levels[static_cast<std::size_t>(i)];
            const auto& r = right.levels[static_cast<std::size_t>(i)];
            expect(rep, subset(l, left.levels[static_cast<std::size_t>(i - 1)]), "left iterate chain not decreasing", ser);
            expect(rep, subset(r, right.levels[static_cast<std::size_t>(i - 1)]), "right iterate chain not decreasing", ser);
            long long residual = 0;
            for (int e = 0; e < b.edge_count(); ++e)
                if (!std::binary_search(l.begin(), l.end(), e) && !std::binary_search(r.begin(), r.end(), e)) ++residual;
            rep.margin("residual <= 2i^2cn", 2LL * i * i * c * n, residual);
        }
    }
}

// Ranks of h-edges mapped into g through their shared vertex pairs.
std::vector<int> lift(const Bigraph& g, const Bigraph& h, const std::vector<int>& ranks) {
    std::vector<int> out;
    for (int r : ranks) out.push_back(g.graph().rank_between(h.graph().edge(r).u, h.graph().edge(r).v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

VerifyReport verify_leaning(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "leaning";
    enumerate_bigraphs(opt.exhaustive_edges, [&](const Bigraph& b) {
        leaning_bounds(rep, b);
        return true;
    });
    Rng rng(opt.seed + 3);
    for (int s = 0; s < opt.samples; ++s) {
        const Bigraph b = random_bigraph(rng, opt.max_vertices);
        leaning_bounds(rep, b);
        // Iterates are monotone under taking subgraphs.
        std::vector<int> keep;
        for (int r = 0; r < b.edge_count(); ++r)
            if (rng.coin()) keep.push_back(r);
        const Bigraph h(b.graph().edge_subgraph(keep), b.sides());
        const int c = 1 + static_cast<int>(rng.below(3));
        for (Lean side : {Lean::Left, Lean::Right}) {
            const auto gi = iterate(b, c, 2, side);
            const auto hi = iterate(h, c, 2, side);
            for (int i = 1; i <= 2; ++i)
                expect(rep, subset(lift(b, h, hi.levels[static_cast<std::size_t>(i)]), gi.levels[static_cast<std::size_t>(i)]),
                       "subgraph iterate not contained in the host iterate", [&] { return to_text(b); });
        }
    }
    return rep;
}

VerifyReport verify_extraction(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "extraction";
    const std::vector<std::pair<std::string, Bigraph>> targets{
        {"T0", single_edge_bigraph()}, {"P:+132", parse_bipath("P:+132")}, {"P:+123", parse_bipath("P:+123")}};
    Rng rng(opt.seed + 4);
    for (const auto& [name, t] : targets) {
        const auto seq = peel_extensions(t);
        if (!seq) {
            rep.fail("target is not a right caterpillar", name);
            continue;
        }
        const int c = t.vertex_count();
        int hits = 0;
        for (long long attempt = 0; hits < opt.samples && attempt < 50LL * opt.samples; ++attempt) {
            // Dense hosts make the deep iterates non-empty.
            const int nl = 5 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, opt.max_vertices / 2 - 4))));
            const int nr = 5 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, opt.max_vertices / 2 - 4))));
            const double p = 0.4 + 0.6 * uniform(rng);
            std::vector<Edge> es;
            for (int x = 0; x < nl; ++x)
                for (int y = nl; y < nl + nr; ++y)
                    if (uniform(rng) < p) es.push_back({x, y, 0});
            auto labels = shuffled_labels(rng, es.size());
            for (std::size_t i = 0; i < es.size(); ++i) es[i].label = labels[i];
            std::vector<Side> sides(static_cast<std::size_t>(nl), Side::Left);
            sides.resize(static_cast<std::size_t>(nl + nr), Side::Right);
            const Bigraph b(Graph(nl + nr, std::move(es)), std::move(sides));
            const bool live = !iterate(b, c, seq->depth(), Lean::Left).levels.back().empty();
            auto ser = [&] { return to_text(b) + "# caterpillar " + name + "\n"; };
            const auto emb = extract_caterpillar(b, t);
            if (!live) {
                expect(rep, !emb.has_value(), "embedding returned for an empty iterate", ser);
                continue;
            }
            ++hits;
            ++rep.instances;
            expect(rep, emb && is_valid_embedding(b, t, *emb), "extracted embedding is invalid", ser);
        }
        if (hits < opt.samples) rep.fail("too few hosts with a non-empty iterate", name + ": " + std::to_string(hits));
    }
    return rep;
}

namespace {

void inclined_checks(VerifyReport& rep, const Bigraph& b) {
    const auto part = inclined_partition(b);
    const Graph& g = b.graph();
    auto ser = [&] { return to_text(b); };
    for (int r = 0; r < g.edge_count(); ++r) {
        const int lx = part.vertex_label[static_cast<std::size_t>(b.left_end(r))];
        const int ly = part.vertex_label[static_cast<std::size_t>(b.right_end(r))];
        const bool left = lx >= 0 && ly >= 0 && lx < ly && ly <= r;
        const bool right = lx >= 0 && ly >= 0 && ly < lx && lx <= r;
        expect(rep, !(left && right), "edge both left and right inclined", ser);
        const Incline want = left ? Incline::Left : right ? Incline::Right : Incline::None;
        expect(rep, part.edge_class[static_cast<std::size_t>(r)] == want, "edge class mismatch", ser);
    }
    rep.margin("non-inclined <= 2n", 2LL * b.vertex_count(), part.count(Incline::None));
}

// A vertex meeting both kept halves yields a P5^{-2143}, so avoiders are
// always separated.
void halves_checks(VerifyReport& rep, const Bigraph& b, const Bigraph& p5, long long& unseparated) {
    const auto h = halves_decomposition(b);
    auto ser = [&] { return to_text(b); };
    expect(rep, h.lower.size() + h.upper.size() + h.leftover.size() == static_cast<std::size_t>(b.edge_count()),
           "halves decomposition is not a partition", ser);
    if (h.separated) {
        rep.margin("min non-isolated half <= n/2", b.vertex_count() / 2, std::min(h.lower_vertices, h.upper_vertices));
        return;
    }
    ++unseparated;
    expect(rep, contains(b, p5), "halves not separated although P:-2143 is avoided", ser);
}

}  // namespace

VerifyReport verify_inclined(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "inclined";
    const Bigraph p5 = parse_bipath("P:-2143");
    long long unseparated = 0;
    enumerate_bigraphs(opt.exhaustive_edges, [&](const Bigraph& b) {
        ++rep.instances;
        inclined_checks(rep, b);
        halves_checks(rep, b, p5, unseparated);
        return true;
    });
    Rng rng(opt.seed + 5);
    for (int s = 0; s < opt.samples; ++s) {
        const Bigraph b = random_bigraph(rng, opt.max_vertices);
        ++rep.instances;
        inclined_checks(rep, b);
        halves_checks(rep, b, p5, unseparated);
    }
    rep.counters.emplace_back("unseparated decompositions (each containing P:-2143)", unseparated);
    return rep;
}

VerifyReport verify_lem1(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "lem1";
    const Bigraph plus = parse_bipath("P:+13254");
    const Bigraph minus = parse_bipath("P:-13254");
    enumerate_bigraphs(opt.exhaustive_edges, [&](const Bigraph& b) {
        const bool avoid_plus = !contains(b, plus);
        const bool avoid_minus = !contains(b, minus);
        if (!avoid_plus && !avoid_minus) return false;
        ++rep.instances;
        if (avoid_plus) expect(rep, lem1_check(b), "left inclined part contains P:-2143", [&] { return to_text(b); });
        if (avoid_minus) expect(rep, co_check(b), "right inclined part contains P:+2143", [&] { return to_text(b); });
        return true;
    });
    Rng rng(opt.seed + 6);
    for (int s = 0; s < std::max(1, opt.samples / 10); ++s) {
        const int nl = 4 + static_cast<int>(rng.below(7)), nr = 4 + static_cast<int>(rng.below(7));
        const bool mirrored = rng.coin();
        const Bigraph b = random_avoider(rng, nl, nr, {mirrored ? minus : plus});
        ++rep.instances;
        expect(rep, mirrored ? co_check(b) : lem1_check(b), "inclined part contains the short path", [&] { return to_text(b); });
    }
    return rep;
}

VerifyReport verify_k33(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "k33";
    for (bool largest : {false, true}) {
        const auto r = k33_canonical_sample(opt.seed, opt.samples, largest);
        rep.instances += r.samples;
        if (r.containing != r.samples) {
            rep.failure_count += r.samples - r.containing - 1;
            rep.fail(std::string(largest ? "largest" : "smallest") + " canonical labelling avoids P:21354",
                     r.counterexample ? to_text(*r.counterexample) : "");
        }
    }
    return rep;
}

VerifyReport verify_add(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "add";
    for (const char* spec : {"P:12", "P:123", "P:132"}) {
        const Graph h = parse_path(spec);
        int prev = 0;
        for (int n = 1; n <= 5; ++n) {
            const auto base = exact_ex(n, h, opt.budget);
            ++rep.instances;
            auto ser = [&] { return std::string(spec) + " n=" + std::to_string(n); };
            expect(rep, base.status == SearchStatus::Exact, "search did not finish", ser);
            expect(rep, base.witness.edge_count() == base.value && !contains(base.witness, h), "witness does not check out", ser);
            expect(rep, base.value >= prev && base.value <= n * (n - 1) / 2, "value not monotone or above C(n,2)", ser);
            expect(rep, exact_ex(n, reverse(h), opt.budget).value == base.value, "value not reverse invariant", ser);
            prev = base.value;
            for (PendantEnd end : {PendantEnd::End1, PendantEnd::End2}) {
                const Graph ext = pendant_extension(h, end);
                const auto grown = exact_ex(n, ext, opt.budget);
                expect(rep, grown.status == SearchStatus::Exact, "search did not finish", ser);
                expect(rep, base.value <= grown.value, "extension lowered the extremal number", ser);
                rep.margin("ex(n,H') <= ex(n,H) + |V(H')| n", base.value + static_cast<long long>(ext.vertex_count()) * n,
                           grown.value);
            }
        }
    }
    return rep;
}

namespace {

// Every rows x cols 0-1 matrix.
void for_each_matrix(int rows, int cols, const std::function<void(const Matrix01&)>& visit) {
    const int cells = rows * cols;
    for (long long mask = 0; mask < (1LL << cells); ++mask) {
        Matrix01 m(rows, cols);
        for (int k = 0; k < cells; ++k)
            if (mask >> k & 1) m.set(k / cols, k % cols);
        visit(m);
    }
}

int brute_eex(int n, const Matrix01& b) {
    int best = 0;
    for_each_matrix(n, n, [&](const Matrix01& a) {
        if (a.ones() > best && !contains_pattern(a, b)) best = a.ones();
    });
    return best;
}

// Staircase matrices are bipartite adjacency matrices of caterpillars.
bool caterpillar_matrix(const Matrix01& a) {
    if (!is_connected_matrix(a) || a.ones() != a.rows() + a.cols() - 1) return false;
    const int n = a.rows(), m = a.cols();
    std::vector<int> deg(static_cast<std::size_t>(n + m), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (a.at(i, j)) ++deg[static_cast<std::size_t>(i)], ++deg[static_cast<std::size_t>(n + j)];
    // Spine vertices (degree >= 2) may have at most two spine neighbours.
    auto spine = [&](int v) { return deg[static_cast<std::size_t>(v)] >= 2; };
    for (int v = 0; v < n + m; ++v) {
        if (!spine(v)) continue;
        int k = 0;
        if (v < n) {
            for (int j = 0; j < m; ++j) k += a.at(v, j) && spine(n + j);
        } else {
            for (int i = 0; i < n; ++i) k += a.at(i, v - n) && spine(i);
        }
        if (k > 2) return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_matrix(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = "matrix";
    (void)opt;
    const auto& family = forbidden_family();
    expect(rep, family.size() == 9, "obstruction family does not have nine members", [] { return std::string(); });
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c)
            for_each_matrix(r, c, [&](const Matrix01& a) {
                if (a.all_zero()) return;
                ++rep.instances;
                auto ser = [&] { return a.str(); };
                const auto cert = staircase_certificate(a);
                if (cert) {
                    expect(rep, describes(*cert, a), "certificate does not describe the matrix", ser);
                    expect(rep, caterpillar_matrix(a), "staircase matrix is not a caterpillar", ser);
                    const auto ops = reach_from_unit(a);
                    expect(rep, ops.has_value(), "staircase matrix not reachable from (1)", ser);
                    if (ops) {
                        Matrix01 m = Matrix01::parse("1");
                        for (const auto& p : *ops) m = elementary_op(m, p);
                        expect(rep, m == a, "elementary operations do not rebuild the matrix", ser);
                    }
                }
                expect(rep, staircase_certificate(a.column_reversed()).has_value() == cert.has_value(),
                       "staircase property not symmetric under column reversal", ser);
                if (!is_connected_matrix(a)) return;
                if (!cert) {
                    const bool hit = std::any_of(family.begin(), family.end(), [&](const Matrix01& f) { return contains_pattern(a, f); });
                    expect(rep, hit, "connected non-staircase matrix avoids every obstruction", ser);
                }
                const auto v = classify_matrix(a);
                expect(rep, v.growth == classify_matrix(a.column_reversed()).growth, "class not symmetric under column reversal", ser);
            });

    const Matrix01 unit = Matrix01::parse("1");
    for (int n = 1; n <= 6; ++n) {
        ++rep.instances;
        expect(rep, eex_exact(n, unit, opt.budget).value == 0, "eex(n,(1)) is not zero", [n] { return "(1) n=" + std::to_string(n); });
    }
    for (const char* spec : {"11;11", "11", "1;1", "11;01", "10;01", "110;101", "101;010"}) {
        const Matrix01 b = Matrix01::parse(spec);
        for (int n = 1; n <= 3; ++n) {
            ++rep.instances;
            auto ser = [&] { return std::string(spec) + " n=" + std::to_string(n); };
            const auto got = eex_exact(n, b, opt.budget);
            expect(rep, got.status == SearchStatus::Exact, "matrix search did not finish", ser);
            expect(rep, got.value == brute_eex(n, b), "eex differs from brute force", ser);
            expect(rep, got.witness.ones() == got.value && !contains_pattern(got.witness, b), "eex witness does not check out", ser);
        }
    }
    // An elementary operation never lowers the extremal number.
    for (const char* spec : {"1", "11", "11;01", "10;11"}) {
        const Matrix01 a = Matrix01::parse(spec);
        for (Boundary side : {Boundary::Top, Boundary::Bottom, Boundary::Left, Boundary::Right}) {
            const int len = side == Boundary::Top || side == Boundary::Bottom ? a.cols() : a.rows();
            for (int k = 0; k < len; ++k) {
                Matrix01 grown;
                try {
                    grown = elementary_op(a, {side, k});
                } catch (const Error&) {
                    continue;
                }
                for (int n = 1; n <= 3; ++n) {
                    ++rep.instances;
                    expect(rep, eex_exact(n, a, opt.budget).value <= eex_exact(n, grown, opt.budget).value,
                           "elementary operation lowered eex", [&] { return a.str() + " -> " + grown.str(); });
                }
            }
        }
    }
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core", "containment", "semi", "equivalence", "main", "leaning",
                                                "extraction", "inclined", "lem1", "k33", "add", "matrix"};
    return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& opt) {
    static const std::map<std::string, VerifyReport (*)(const VerifyOptions&)> table{
        {"core", verify_core},         {"containment", verify_containment}, {"semi", verify_semi},
        {"equivalence", verify_equivalence}, {"main", verify_main},     {"leaning", verify_leaning},
        {"extraction", verify_extraction},   {"inclined", verify_inclined}, {"lem1", verify_lem1},
        {"k33", verify_k33},           {"add", verify_add},                 {"matrix", verify_matrix}};
    std::vector<VerifyReport> out;
    if (name == "all") {
        for (const auto& n : suite_names()) out.push_back(table.at(n)(opt));
        return out;
    }
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown suite '" + name + "'");
    out.push_back(it->second(opt));
    return out;
}

}  // namespace eog
