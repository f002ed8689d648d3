#include "eog/leaning.hpp"

#include <algorithm>
#include <stdexcept>

#include "eog/io.hpp"

namespace eog {

namespace {

// Incident ranks per vertex restricted to an edge subset.
struct SubgraphIndex {
    std::vector<std::vector<int>> inc;

    SubgraphIndex(const Graph& g, const std::vector<int>& edges) : inc(static_cast<std::size_t>(g.vertex_count())) {
        for (int r : edges) {
            inc[static_cast<std::size_t>(g.edge(r).u)].push_back(r);
            inc[static_cast<std::size_t>(g.edge(r).v)].push_back(r);
        }
        for (auto& l : inc) std::sort(l.begin(), l.end());
    }

    std::vector<int> below(int v, int rank) const {
        const auto& l = inc[static_cast<std::size_t>(v)];
        return {l.begin(), std::lower_bound(l.begin(), l.end(), rank)};
    }
};

LeaningClass classify_edge(const Bigraph& b, const SubgraphIndex& idx, int rank, int c) {
    const auto near = idx.below(b.left_end(rank), rank);
    const auto far = idx.below(b.right_end(rank), rank);
    LeaningClass out;
    const auto cs = static_cast<std::size_t>(c);
    if (near.size() < cs || far.size() < cs) return out;
    // Left: c smallest near edges below the c largest far edges.
    if (far[far.size() - cs] > near[cs - 1])
        out.left = LeaningWitness{{near.begin(), near.begin() + c}, {far.end() - c, far.end()}};
    // Right: c largest near edges above the c smallest far edges.
    if (near[near.size() - cs] > far[cs - 1])
        out.right = LeaningWitness{{near.end() - c, near.end()}, {far.begin(), far.begin() + c}};
    return out;
}

std::vector<int> all_ranks(const Graph& g) {
    std::vector<int> r(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
}

std::vector<int> leaning_level(const Bigraph& b, const std::vector<int>& edges, int c, Lean side) {
    SubgraphIndex idx(b.graph(), edges);
    std::vector<int> out;
    for (int r : edges) {
        auto cls = classify_edge(b, idx, r, c);
        if (side == Lean::Left ? cls.left.has_value() : cls.right.has_value()) out.push_back(r);
    }
    return out;
}

void require_c(int c) {
    if (c < 1) throw Error("leaning parameter c must be positive");
}

}  // namespace

LeaningClass leaning_class(const Bigraph& b, const std::vector<int>& edges, int rank, int c) {
    require_c(c);
    if (!std::binary_search(edges.begin(), edges.end(), rank)) throw Error("edge is not in the subgraph");
    return classify_edge(b, SubgraphIndex(b.graph(), edges), rank, c);
}

LeaningClass leaning_class(const Bigraph& b, int rank, int c) {
    if (rank < 0 || rank >= b.edge_count()) throw Error("no edge of rank " + std::to_string(rank));
    return leaning_class(b, all_ranks(b.graph()), rank, c);
}

std::vector<int> non_leaning_edges(const Bigraph& b, int c) {
    require_c(c);
    const auto edges = all_ranks(b.graph());
    SubgraphIndex idx(b.graph(), edges);
    std::vector<int> out;
    for (int r : edges)
        if (!classify_edge(b, idx, r, c).leaning()) out.push_back(r);
    return out;
}

IterateChain iterate(const Bigraph& b, int c, int i, Lean side) {
    require_c(c);
    if (i < 0) throw Error("iterate depth must be non-negative");
    IterateChain chain{side, c, {all_ranks(b.graph())}};
    for (int j = 1; j <= i; ++j) chain.levels.push_back(leaning_level(b, chain.levels.back(), c, side));
    return chain;
}

std::vector<int> residual_edges(const Bigraph& b, int c, int i) {
    const auto left = iterate(b, c, i, Lean::Left).levels.back();
    const auto right = iterate(b, c, i, Lean::Right).levels.back();
    std::vector<int> out;
    for (int r = 0; r < b.edge_count(); ++r)
        if (!std::binary_search(left.begin(), left.end(), r) && !std::binary_search(right.begin(), right.end(), r))
            out.push_back(r);
    return out;
}

std::optional<Embedding> extract_caterpillar(const Bigraph& host, const Bigraph& t) {
    auto seq = peel_extensions(t);
    if (!seq) throw Error("extract_caterpillar needs a right caterpillar");
    const int c = t.vertex_count();
    const int depth = seq->depth();
    const auto chain = iterate(host, c, depth, Lean::Left);
    const auto& top = chain.levels.back();
    if (top.empty()) return std::nullopt;

    // Build the embedding of replay(seq); its vertices are numbered in
    // creation order, which is what replay() does too.
    const Bigraph shape = replay(*seq);
    std::vector<int> image;  // shape vertex -> host vertex
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    auto take = [&](int w) {
        image.push_back(w);
        used[static_cast<std::size_t>(w)] = 1;
    };
    int smallest = top.front();  // host rank of the smallest embedded edge
    take(host.left_end(smallest));
    take(host.right_end(smallest));

    for (int j = 1; j <= depth; ++j) {
        const ExtensionStep& step = seq->steps[static_cast<std::size_t>(j - 1)];
        const auto& level = chain.levels[static_cast<std::size_t>(depth - j)];
        auto cls = leaning_class(host, level, smallest, c);
        if (!cls.left) throw std::logic_error("embedded edge lost its leaning witness");
        const int x = host.left_end(smallest), y = host.right_end(smallest);
        auto pick = [&](const std::vector<int>& pool, int at, std::size_t want) {
            std::vector<int> chosen;
            for (int r : pool) {
                if (chosen.size() == want) break;
                int w = host.graph().edge(r).other(at);
                if (!used[static_cast<std::size_t>(w)]) chosen.push_back(r);
            }
            if (chosen.size() != want) throw std::logic_error("not enough free edges to extend the caterpillar");
            return chosen;
        };
        // replay() creates right-end vertices first, then left-end ones,
        // each block in increasing label order.
        auto far = pick(cls.left->far, y, step.right.size());
        auto near = pick(cls.left->near, x, step.left.size());
        for (int r : far) take(host.graph().edge(r).other(y));
        for (int r : near) take(host.graph().edge(r).other(x));
        smallest = near.empty() ? far.front() : near.front();
    }

    auto iso = find_isomorphism(t, shape);
    if (iso.empty()) throw std::logic_error("replayed extension sequence is not isomorphic to the caterpillar");
    Embedding emb;
    for (int v = 0; v < t.vertex_count(); ++v)
        emb.vertex_map.push_back(image[static_cast<std::size_t>(iso[static_cast<std::size_t>(v)])]);
    return emb;
}

int InclinedPartition::count(Incline k) const {
    return static_cast<int>(std::count(edge_class.begin(), edge_class.end(), k));
}

InclinedPartition inclined_partition(const Bigraph& b) {
    const Graph& g = b.graph();
    InclinedPartition out;
    for (int v = 0; v < g.vertex_count(); ++v)
        out.vertex_label.push_back(g.degree(v) >= 2 ? g.incident(v)[1] : -1);
    for (int r = 0; r < g.edge_count(); ++r) {
        const int lx = out.vertex_label[static_cast<std::size_t>(b.left_end(r))];
        const int ly = out.vertex_label[static_cast<std::size_t>(b.right_end(r))];
        Incline k = Incline::None;
        if (lx >= 0 && ly >= 0) {
            if (lx < ly && ly <= r) k = Incline::Left;
            else if (ly < lx && lx <= r) k = Incline::Right;
        }
        out.edge_class.push_back(k);
    }
    return out;
}

Bigraph inclined_subgraph(const Bigraph& b, Incline which) {
    auto part = inclined_partition(b);
    std::vector<int> keep;
    for (int r = 0; r < b.edge_count(); ++r)
        if (part.edge_class[static_cast<std::size_t>(r)] == which) keep.push_back(r);
    return Bigraph(b.graph().edge_subgraph(keep), b.sides());
}

HalvesDecomposition halves_decomposition(const Bigraph& b) {
    const Graph& g = b.graph();
    const int m = g.edge_count();
    const int half = m / 2;
    std::vector<char> stripped(static_cast<std::size_t>(m), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        // Two highest lower-half edges and two lowest upper-half edges at v.
        auto split = std::lower_bound(inc.begin(), inc.end(), half);
        for (auto it = split; it != inc.begin() && split - it < 2;) stripped[static_cast<std::size_t>(*--it)] = 1;
        for (auto it = split; it != inc.end() && it - split < 2; ++it) stripped[static_cast<std::size_t>(*it)] = 1;
    }
    std::vector<int> kept;
    for (int r = 0; r < m; ++r)
        if (!stripped[static_cast<std::size_t>(r)]) kept.push_back(r);
    const Bigraph reduced(g.edge_subgraph(kept), b.sides());
    const auto part = inclined_partition(reduced);

    HalvesDecomposition out;
    std::vector<char> meets_lower(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> meets_upper(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> placed(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (part.edge_class[i] != Incline::Left) continue;
        const int r = kept[i];
        const Edge& e = g.edge(r);
        auto& meets = r < half ? meets_lower : meets_upper;
        (r < half ? out.lower : out.upper).push_back(r);
        meets[static_cast<std::size_t>(e.u)] = meets[static_cast<std::size_t>(e.v)] = 1;
        placed[static_cast<std::size_t>(r)] = 1;
    }
    for (int r = 0; r < m; ++r)
        if (!placed[static_cast<std::size_t>(r)]) out.leftover.push_back(r);
    for (int v = 0; v < g.vertex_count(); ++v) {
        out.lower_vertices += meets_lower[static_cast<std::size_t>(v)];
        out.upper_vertices += meets_upper[static_cast<std::size_t>(v)];
        if (meets_lower[static_cast<std::size_t>(v)] && meets_upper[static_cast<std::size_t>(v)]) out.separated = false;
    }
    return out;
}

bool lem1_check(const Bigraph& b) {
    static const Bigraph pattern = parse_bipath("P:-2143");
    return !contains(inclined_subgraph(b, Incline::Left), pattern);
}

bool co_check(const Bigraph& b) {
    static const Bigraph pattern = parse_bipath("P:+2143");
    return !contains(inclined_subgraph(b, Incline::Right), pattern);
}

}  // namespace eog
