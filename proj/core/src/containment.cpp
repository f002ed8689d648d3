#include "eog/containment.hpp"

#include "eog/detail/matcher.hpp"

namespace eog {

namespace {

void require_nontrivial(const Graph& h) {
    if (h.edge_count() == 0) throw Error("forbidden pattern must have at least one edge");
}

template <class Visit>
void search(const Graph& g, const std::vector<Side>* g_sides, const detail::Pattern& p, Visit&& visit) {
    detail::GraphHost host{g};
    detail::Matcher<detail::GraphHost> m(p, host, g_sides);
    m.run(visit);
}

std::optional<Embedding> first(const Graph& g, const std::vector<Side>* sides, const detail::Pattern& p) {
    std::optional<Embedding> out;
    search(g, sides, p, [&](const std::vector<int>& map) {
        out = Embedding{map};
        return false;
    });
    return out;
}

}  // namespace

bool contains(const Graph& g, const Graph& h) { return find_embedding(g, h).has_value(); }
bool contains(const Bigraph& g, const Bigraph& h) { return find_embedding(g, h).has_value(); }

std::optional<Embedding> find_embedding(const Graph& g, const Graph& h) {
    require_nontrivial(h);
    return first(g, nullptr, detail::Pattern::from(h));
}

std::optional<Embedding> find_embedding(const Bigraph& g, const Bigraph& h) {
    require_nontrivial(h.graph());
    return first(g.graph(), &g.sides(), detail::Pattern::from(h));
}

void for_each_embedding(const Graph& g, const Graph& h, const std::function<bool(const Embedding&)>& visit) {
    require_nontrivial(h);
    search(g, nullptr, detail::Pattern::from(h), [&](const std::vector<int>& map) { return visit(Embedding{map}); });
}

void for_each_embedding(const Bigraph& g, const Bigraph& h, const std::function<bool(const Embedding&)>& visit) {
    require_nontrivial(h.graph());
    search(g.graph(), &g.sides(), detail::Pattern::from(h),
           [&](const std::vector<int>& map) { return visit(Embedding{map}); });
}

std::vector<Embedding> enumerate_embeddings(const Graph& g, const Graph& h) {
    std::vector<Embedding> out;
    for_each_embedding(g, h, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

std::vector<Embedding> enumerate_embeddings(const Bigraph& g, const Bigraph& h) {
    std::vector<Embedding> out;
    for_each_embedding(g, h, [&](const Embedding& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

bool is_valid_embedding(const Graph& g, const Graph& h, const Embedding& emb) {
    if (static_cast<int>(emb.vertex_map.size()) != h.vertex_count()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int w : emb.vertex_map) {
        if (w < 0 || w >= g.vertex_count() || seen[static_cast<std::size_t>(w)]) return false;
        seen[static_cast<std::size_t>(w)] = 1;
    }
    int prev = -1;
    for (const Edge& e : h.edges()) {
        int r = g.rank_between(emb.vertex_map[static_cast<std::size_t>(e.u)], emb.vertex_map[static_cast<std::size_t>(e.v)]);
        if (r < 0 || r <= prev) return false;
        prev = r;
    }
    return true;
}

bool is_valid_embedding(const Bigraph& g, const Bigraph& h, const Embedding& emb) {
    if (!is_valid_embedding(g.graph(), h.graph(), emb)) return false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (g.side(emb.vertex_map[static_cast<std::size_t>(v)]) != h.side(v)) return false;
    return true;
}

}  // namespace eog
