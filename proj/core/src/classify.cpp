#include "eog/classify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

#include "eog/io.hpp"

namespace eog {

namespace {

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw Error("operation needs a graph with at least one edge");
}

bool edges_meet(const Edge& a, const Edge& b) { return a.touches(b.u) || a.touches(b.v); }

// Rank of an edge joining a and b (disjoint edges), larger than `above`; -1 if none.
int bridge_rank(const Graph& g, const Edge& a, const Edge& b, int above) {
    for (int x : {a.u, a.v})
        for (int y : {b.u, b.v}) {
            int r = g.rank_between(x, y);
            if (r > above) return r;
        }
    return -1;
}

}  // namespace

bool is_semi_caterpillar(const Graph& g) {
    require_edges(g);
    if (!is_tree(g)) return false;
    for (auto [r1, r2] : consecutive_pairs(g)) {
        const Edge& a = g.edge(r1);
        const Edge& b = g.edge(r2);
        if (edges_meet(a, b)) continue;
        if (bridge_rank(g, a, b, r2) < 0) return false;
    }
    return true;
}

bool is_right_caterpillar(const Bigraph& b) {
    const Graph& g = b.graph();
    if (!is_semi_caterpillar(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (b.side(v) == Side::Right && !is_close(g, v)) return false;
    return true;
}

Bigraph single_edge_bigraph() {
    return Bigraph(Graph(2, {{0, 1, 1}}, {"l", "r"}), {Side::Left, Side::Right});
}

namespace {

// Number of edges at v with rank >= from.
int suffix_degree(const Graph& g, int v, int from) {
    const auto& inc = g.incident(v);
    return static_cast<int>(inc.end() - std::lower_bound(inc.begin(), inc.end(), from));
}

// Can the edges of rank [from, base) be attached to edge `base` as a single
// extension of the suffix starting at `base`? Fills the step when so.
bool extension_fits(const Bigraph& b, int from, int base, ExtensionStep& step) {
    const Graph& g = b.graph();
    const int x = b.left_end(base), y = b.right_end(base);
    step = ExtensionStep{base, {}, {}};
    for (int r = from; r < base; ++r) {
        const Edge& e = g.edge(r);
        int at;
        if (e.touches(x) && !e.touches(y)) {
            at = x;
        } else if (e.touches(y) && !e.touches(x)) {
            at = y;
        } else {
            return false;
        }
        int leaf = e.other(at);
        // The far end must be a new vertex of degree one.
        if (suffix_degree(g, leaf, from) != 1) return false;
        if (at == x) {
            if (!step.right.empty()) return false;  // left ones must come first
            step.left.push_back(r);
        } else {
            step.right.push_back(r);
        }
    }
    return true;
}

bool spans_all_vertices(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

}  // namespace

std::optional<ExtensionSequence> peel_extensions(const Bigraph& b) {
    const Graph& g = b.graph();
    require_edges(g);
    if (!spans_all_vertices(g)) return std::nullopt;
    const int m = g.edge_count();
    constexpr int unreachable = std::numeric_limits<int>::max();
    // depth[t]: fewest extensions building the suffix of edges with rank >= t.
    std::vector<int> depth(static_cast<std::size_t>(m), unreachable);
    std::vector<int> choice(static_cast<std::size_t>(m), -1);
    depth[static_cast<std::size_t>(m - 1)] = 0;
    ExtensionStep scratch;
    for (int t = m - 2; t >= 0; --t) {
        for (int base = t + 1; base < m; ++base) {
            if (depth[static_cast<std::size_t>(base)] == unreachable) continue;
            if (!extension_fits(b, t, base, scratch)) continue;
            int d = depth[static_cast<std::size_t>(base)] + 1;
            if (d < depth[static_cast<std::size_t>(t)]) {
                depth[static_cast<std::size_t>(t)] = d;
                choice[static_cast<std::size_t>(t)] = base;
            }
        }
    }
    if (depth[0] == unreachable) return std::nullopt;
    ExtensionSequence seq;
    for (int t = 0; t < m - 1; t = choice[static_cast<std::size_t>(t)]) {
        ExtensionStep step;
        extension_fits(b, t, choice[static_cast<std::size_t>(t)], step);
        seq.steps.push_back(std::move(step));
    }
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
}

std::optional<ExtensionSequence> peel_extensions_greedy(const Bigraph& b) {
    const Graph& g = b.graph();
    require_edges(g);
    if (!spans_all_vertices(g)) return std::nullopt;
    const int m = g.edge_count();
    ExtensionSequence seq;
    int t = 0;
    while (t < m - 1) {
        const Edge& e1 = g.edge(t);
        const Edge& e2 = g.edge(t + 1);
        int base;
        if (edges_meet(e1, e2)) {
            base = t + 1;
        } else {
            base = bridge_rank(g, e1, e2, t + 1);
            if (base < 0) return std::nullopt;
        }
        ExtensionStep step;
        if (!extension_fits(b, t, base, step)) return std::nullopt;
        seq.steps.push_back(std::move(step));
        t = base;
    }
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
}

Bigraph replay(const ExtensionSequence& seq) {
    // Labels go down from zero; shifted to positive at the end.
    // Every edge is stored with its left end as u.
    std::vector<Edge> edges{{0, 1, 0}};
    std::vector<Side> sides{Side::Left, Side::Right};
    int smallest = 0;  // index into edges
    long long low = 0;
    for (const ExtensionStep& s : seq.steps) {
        const int x = edges[static_cast<std::size_t>(smallest)].u;  // left end
        const int y = edges[static_cast<std::size_t>(smallest)].v;  // right end
        const long long top = low - 1;
        const auto nl = static_cast<long long>(s.left.size());
        const auto nr = static_cast<long long>(s.right.size());
        // Right-end edges take the upper block, left-end edges the lower one.
        for (long long i = 0; i < nr; ++i) {
            int w = static_cast<int>(sides.size());
            sides.push_back(Side::Left);
            edges.push_back({w, y, top - nr + 1 + i});
        }
        for (long long i = 0; i < nl; ++i) {
            int w = static_cast<int>(sides.size());
            sides.push_back(Side::Right);
            edges.push_back({x, w, top - nr - nl + 1 + i});
        }
        low = top - nr - nl + 1;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].label == low) smallest = static_cast<int>(i);
        if (nl + nr == 0) throw Error("extension step adds no edges");
    }
    for (auto& e : edges) e.label = e.label - low + 1;
    const int n = static_cast<int>(sides.size());
    return Bigraph(Graph(n, std::move(edges)), std::move(sides));
}

std::optional<CloseColouring> ocn2_forest_test(const Graph& forest) {
    require_edges(forest);
    if (!is_forest(forest)) throw Error("order chromatic number 2 test needs a forest");
    auto colour = two_colouring(forest);
    auto comp = component_ids(forest);
    const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    // ok[c][k]: every vertex of colour k in component c is close.
    std::vector<std::array<bool, 2>> ok(static_cast<std::size_t>(ncomp), {true, true});
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (!is_close(forest, v))
            ok[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])][static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] = false;
    std::vector<bool> flip(static_cast<std::size_t>(ncomp), false);
    for (int c = 0; c < ncomp; ++c) {
        if (ok[static_cast<std::size_t>(c)][0]) continue;
        if (!ok[static_cast<std::size_t>(c)][1]) return std::nullopt;
        flip[static_cast<std::size_t>(c)] = true;
    }
    for (int v = 0; v < forest.vertex_count(); ++v)
        if (flip[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])]) colour[static_cast<std::size_t>(v)] ^= 1;
    return CloseColouring{std::move(colour), 0};
}

const std::vector<Graph>& semi_caterpillar_obstructions() {
    static const std::vector<Graph> paths{parse_path("P:213"), parse_path("P:1342"), parse_path("P:1432")};
    return paths;
}

namespace {
const std::vector<std::string>& obstruction_names() {
    static const std::vector<std::string> names{"P:213", "P:1342", "P:1432"};
    return names;
}

std::optional<PathWitness> find_obstruction(const Graph& g) {
    const auto& paths = semi_caterpillar_obstructions();
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (auto emb = find_embedding(g, paths[i])) return PathWitness{obstruction_names()[i], *emb};
    return std::nullopt;
}
}  // namespace

bool semi_via_forbidden_paths(const Graph& g) {
    require_edges(g);
    if (!is_forest(g) || !ocn2_forest_test(g))
        throw Error("forbidden-path characterization needs a forest of order chromatic number 2");
    if (!is_connected(g)) return false;
    for (const Graph& p : semi_caterpillar_obstructions())
        if (contains(g, p)) return false;
    return true;
}

bool alt_right_caterpillar_check(const Bigraph& b) {
    const Graph& g = b.graph();
    if (!is_semi_caterpillar(g)) throw Error("alternative right caterpillar test needs an underlying semi-caterpillar");
    for (auto [r1, r2] : consecutive_pairs(g)) {
        const Edge& a = g.edge(r1);
        const Edge& c = g.edge(r2);
        if (edges_meet(a, c)) continue;
        int e = bridge_rank(g, a, c, r2);
        if (!c.touches(b.right_end(e))) return false;
    }
    return true;
}

bool is_monotone(const Graph& path) {
    auto s = path_ranks(path);
    return std::is_sorted(s.begin(), s.end()) || std::is_sorted(s.rbegin(), s.rend());
}

bool is_flipped(const Graph& path) {
    auto s = path_ranks(path);
    const int k = static_cast<int>(s.size());
    if (k < 3) return false;
    std::vector<int> top(static_cast<std::size_t>(k)), bottom(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) top[static_cast<std::size_t>(i)] = bottom[static_cast<std::size_t>(i)] = i;
    std::swap(top[static_cast<std::size_t>(k - 2)], top[static_cast<std::size_t>(k - 1)]);
    std::swap(bottom[0], bottom[1]);
    std::vector<int> r(s.rbegin(), s.rend());
    return s == top || s == bottom || r == top || r == bottom;
}

std::string to_string(GrowthClass c) { return c == GrowthClass::Linear ? "Linear" : "OmegaNLogN"; }

namespace {

std::vector<int> find_cycle(const Graph& g) {
    for (int r = 0; r < g.edge_count(); ++r) {
        const Edge& e = g.edge(r);
        // Path from e.v to e.u avoiding edge r.
        std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -2);
        std::vector<int> stack{e.v};
        parent[static_cast<std::size_t>(e.v)] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s : g.incident(v)) {
                if (s == r) continue;
                int w = g.edge(s).other(v);
                if (parent[static_cast<std::size_t>(w)] != -2) continue;
                parent[static_cast<std::size_t>(w)] = v;
                stack.push_back(w);
            }
        }
        if (parent[static_cast<std::size_t>(e.u)] == -2) continue;
        std::vector<int> cycle;
        for (int v = e.u; v != -1; v = parent[static_cast<std::size_t>(v)]) cycle.push_back(v);
        return cycle;
    }
    return {};
}

Bigraph close_bipartition(const Graph& g, const CloseColouring& col) {
    std::vector<Side> sides;
    for (int c : col.colour) sides.push_back(c == col.close_class ? Side::Right : Side::Left);
    return Bigraph(g, std::move(sides));
}

}  // namespace

DichotomyVerdict classify_connected(const Graph& g) {
    require_edges(g);
    if (!is_connected(g))
        throw Error("the dichotomy only covers connected graphs");
    DichotomyVerdict out;
    if (!is_tree(g)) {
        out.growth = GrowthClass::OmegaNLogN;
        out.evidence = CycleEvidence{find_cycle(g)};
        out.summary = "OmegaNLogN (contains a cycle)";
        return out;
    }
    const Graph rev = reverse(g);
    const bool fwd_semi = is_semi_caterpillar(g);
    const bool rev_semi = is_semi_caterpillar(rev);
    auto col = ocn2_forest_test(g);
    if ((fwd_semi || rev_semi) && col) {
        const Graph& h = fwd_semi ? g : rev;
        Bigraph rc = close_bipartition(h, *col);
        auto seq = peel_extensions(rc);
        if (!seq) throw std::logic_error("close bipartition of a semi-caterpillar is not a right caterpillar");
        out.growth = GrowthClass::Linear;
        out.summary = fwd_semi ? "Linear (semi-caterpillar, order chromatic number 2)"
                               : "Linear (reverse is a semi-caterpillar, order chromatic number 2)";
        out.evidence = LinearEvidence{!fwd_semi, *col, std::move(rc), std::move(*seq)};
        return out;
    }
    out.growth = GrowthClass::OmegaNLogN;
    if (!fwd_semi && !rev_semi) {
        auto fw = find_obstruction(g);
        auto rw = find_obstruction(rev);
        if (fw && rw) {
            out.summary = "OmegaNLogN (contains " + fw->pattern + ", reverse contains " + rw->pattern + ")";
            out.evidence = ForbiddenPathEvidence{std::move(*fw), std::move(*rw)};
            return out;
        }
    }
    if (col) throw std::logic_error("tree of order chromatic number 2 escaped the dichotomy");
    out.summary = "OmegaNLogN (order chromatic number above 2)";
    out.evidence = ColouringFailure{};
    return out;
}

DichotomyVerdict classify_path(const Graph& path) {
    if (!is_path(path)) throw Error("classify_path needs a path");
    if (path.edge_count() < 2) throw Error("classify_path needs at least two edges");
    const bool mono = is_monotone(path);
    const bool flip = !mono && is_flipped(path);
    DichotomyVerdict v = classify_connected(path);
    const GrowthClass expected = mono || flip ? GrowthClass::Linear : GrowthClass::OmegaNLogN;
    if (v.growth != expected) throw std::logic_error("path templates disagree with the connected classifier");
    if (mono) v.summary = "Linear (monotone path)";
    if (flip) v.summary = "Linear (flipped path)";
    return v;
}

bool check_verdict(const Graph& g, const DichotomyVerdict& verdict) {
    struct Checker {
        const Graph& g;
        GrowthClass growth;

        bool operator()(const LinearEvidence& ev) const {
            if (growth != GrowthClass::Linear) return false;
            const Graph h = ev.reversed ? reverse(g) : g;
            if (!is_semi_caterpillar(h)) return false;
            const auto& col = ev.colouring.colour;
            if (static_cast<int>(col.size()) != g.vertex_count()) return false;
            for (const Edge& e : g.edges())
                if (col[static_cast<std::size_t>(e.u)] == col[static_cast<std::size_t>(e.v)]) return false;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (col[static_cast<std::size_t>(v)] == ev.colouring.close_class && !is_close(g, v)) return false;
            if (canonical_code(close_bipartition(h, ev.colouring)) != canonical_code(ev.right_caterpillar)) return false;
            if (!is_right_caterpillar(ev.right_caterpillar)) return false;
            return is_isomorphic(replay(ev.extensions), ev.right_caterpillar);
        }
        bool operator()(const CycleEvidence& ev) const {
            const auto& c = ev.cycle;
            if (growth != GrowthClass::OmegaNLogN || c.size() < 3) return false;
            std::vector<int> sorted = c;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
            return true;
        }
        bool operator()(const ForbiddenPathEvidence& ev) const {
            if (growth != GrowthClass::OmegaNLogN) return false;
            return is_valid_embedding(g, parse_path(ev.forward.pattern), ev.forward.embedding) &&
                   is_valid_embedding(reverse(g), parse_path(ev.reversed.pattern), ev.reversed.embedding);
        }
        bool operator()(const ColouringFailure&) const {
            return growth == GrowthClass::OmegaNLogN && is_forest(g) && !ocn2_forest_test(g);
        }
    };
    return std::visit(Checker{g, verdict.growth}, verdict.evidence);
}

long long linear_upper_bound(const Bigraph& right_caterpillar, long long n) {
    auto seq = peel_extensions(right_caterpillar);
    if (!seq) throw Error("linear bound needs a right caterpillar");
    const long long i = seq->depth();
    return 4 * i * i * right_caterpillar.vertex_count() * n;
}

}  // namespace eog
