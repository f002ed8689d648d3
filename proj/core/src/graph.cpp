#include "eog/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace eog {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(vertex_count), edges_(std::move(edges)), names_(std::move(names)) {
    if (n_ < 0) throw Error("negative vertex count");
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
        throw Error("vertex name list does not match vertex count");
    if (names_.empty()) {
        names_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) names_.push_back(std::to_string(v));
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.label < b.label; });
    adj_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    inc_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t r = 0; r < edges_.size(); ++r) {
        const Edge& e = edges_[r];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("loop at vertex " + names_[static_cast<std::size_t>(e.u)]);
        if (r > 0 && edges_[r - 1].label == e.label)
            throw Error("label " + std::to_string(e.label) + " used twice");
        auto& slot = adj_[static_cast<std::size_t>(e.u * n_ + e.v)];
        if (slot >= 0)
            throw Error("parallel edge " + names_[static_cast<std::size_t>(e.u)] + " " +
                        names_[static_cast<std::size_t>(e.v)]);
        slot = static_cast<int>(r);
        adj_[static_cast<std::size_t>(e.v * n_ + e.u)] = static_cast<int>(r);
        inc_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(r));
        inc_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(r));
    }
}

Graph Graph::normalized() const {
    std::vector<Edge> es = edges_;
    for (std::size_t r = 0; r < es.size(); ++r) es[r].label = static_cast<long long>(r) + 1;
    return Graph(n_, std::move(es), names_);
}

Graph Graph::edge_subgraph(std::span<const int> ranks) const {
    std::vector<Edge> es;
    es.reserve(ranks.size());
    for (int r : ranks) es.push_back(edge(r));
    return Graph(n_, std::move(es), names_);
}

Graph Graph::without_isolated() const {
    std::vector<int> id(static_cast<std::size_t>(n_), -1);
    std::vector<std::string> names;
    int next = 0;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) > 0) {
            id[static_cast<std::size_t>(v)] = next++;
            names.push_back(name(v));
        }
    }
    std::vector<Edge> es = edges_;
    for (auto& e : es) {
        e.u = id[static_cast<std::size_t>(e.u)];
        e.v = id[static_cast<std::size_t>(e.v)];
    }
    return Graph(next, std::move(es), std::move(names));
}

Bigraph::Bigraph(Graph graph, std::vector<Side> sides) : graph_(std::move(graph)), sides_(std::move(sides)) {
    if (static_cast<int>(sides_.size()) != graph_.vertex_count())
        throw Error("side assignment does not cover every vertex");
    for (const Edge& e : graph_.edges()) {
        if (side(e.u) == side(e.v))
            throw Error("edge " + graph_.name(e.u) + " " + graph_.name(e.v) + " joins two vertices on the same side");
    }
}

int Bigraph::left_end(int rank) const {
    const Edge& e = graph_.edge(rank);
    return side(e.u) == Side::Left ? e.u : e.v;
}

int Bigraph::right_end(int rank) const {
    const Edge& e = graph_.edge(rank);
    return side(e.u) == Side::Right ? e.u : e.v;
}

Bigraph Bigraph::swapped() const {
    std::vector<Side> s = sides_;
    for (auto& x : s) x = opposite(x);
    return Bigraph(graph_, std::move(s));
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int r : g.incident(v)) {
                int w = g.edge(r).other(v);
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

namespace {
int component_count(const Graph& g) {
    auto comp = component_ids(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}
}  // namespace

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) { return g.edge_count() == g.vertex_count() - component_count(g); }

bool is_tree(const Graph& g) { return g.vertex_count() >= 1 && is_connected(g) && g.edge_count() == g.vertex_count() - 1; }

bool is_path(const Graph& g) {
    if (!is_tree(g) || g.edge_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    return d;
}

std::vector<int> path_vertices(const Graph& g) {
    if (!is_path(g)) throw Error("graph is not a path");
    int start = 0;
    while (g.degree(start) != 1) ++start;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < g.vertex_count()) {
        for (int r : g.incident(cur)) {
            int w = g.edge(r).other(cur);
            if (w != prev) {
                prev = cur;
                cur = w;
                break;
            }
        }
        order.push_back(cur);
    }
    return order;
}

std::vector<int> path_ranks(const Graph& g) {
    auto vs = path_vertices(g);
    std::vector<int> ranks;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) ranks.push_back(g.rank_between(vs[i], vs[i + 1]));
    return ranks;
}

Graph reverse(const Graph& g) {
    std::vector<Edge> es = g.edges();
    const long long m = static_cast<long long>(es.size());
    for (std::size_t r = 0; r < es.size(); ++r) es[r].label = m - static_cast<long long>(r);
    return Graph(g.vertex_count(), std::move(es), g.names());
}

Bigraph reverse(const Bigraph& b) { return Bigraph(reverse(b.graph()), b.sides()); }

bool is_close(const Graph& g, int v) {
    const auto& inc = g.incident(v);
    if (inc.size() <= 1) return true;
    return inc.back() - inc.front() + 1 == static_cast<int>(inc.size());
}

std::vector<int> close_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_close(g, v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> consecutive_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r + 1 < g.edge_count(); ++r) out.emplace_back(r, r + 1);
    return out;
}

std::vector<int> two_colouring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (colour[static_cast<std::size_t>(s)] >= 0) continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int r : g.incident(v)) {
                int w = g.edge(r).other(v);
                auto& cw = colour[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - colour[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (cw == colour[static_cast<std::size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return colour;
}

std::vector<Bigraph> bipartitions(const Graph& g) {
    if (!is_connected(g)) throw Error("bipartitions require a connected graph");
    auto colour = two_colouring(g);
    if (colour.empty()) return {};
    std::vector<Side> sides;
    sides.reserve(colour.size());
    for (int c : colour) sides.push_back(c == 0 ? Side::Left : Side::Right);
    Bigraph first(g, std::move(sides));
    Bigraph second = first.swapped();
    return {std::move(first), std::move(second)};
}

// Canonical form.
//
// An isomorphism of edge-ordered graphs maps the edge of rank r to the edge of
// rank r, so scanning edges in rank order and numbering vertices by first
// appearance yields the same code for isomorphic graphs. The only freedom is
// the numbering of the two endpoints of an edge whose endpoints are both new;
// we keep every labelling that is tied for the lexicographically smallest code
// prefix and branch on those edges. Bigraphs put the left end first, which
// removes the freedom entirely.

namespace {

struct Labelling {
    std::vector<int> id;  // vertex -> canonical number or -1
    int next = 0;
};

std::pair<std::vector<int>, std::vector<int>> canonical_labelling(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Labelling> cands(1);
    cands[0].id.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(2 * g.edge_count() + 1));

    for (int r = 0; r < g.edge_count(); ++r) {
        const Edge& e = g.edge(r);
        std::vector<Labelling> next_cands;
        std::pair<int, int> best{1 << 30, 1 << 30};
        auto offer = [&](Labelling&& l, std::pair<int, int> entry) {
            if (entry < best) {
                best = entry;
                next_cands.clear();
            }
            if (entry == best) next_cands.push_back(std::move(l));
        };
        for (auto& c : cands) {
            int a = c.id[static_cast<std::size_t>(e.u)];
            int b = c.id[static_cast<std::size_t>(e.v)];
            if (a >= 0 && b >= 0) {
                offer(std::move(c), std::minmax(a, b));
            } else if (a >= 0 || b >= 0) {
                int fresh = a >= 0 ? e.v : e.u;
                c.id[static_cast<std::size_t>(fresh)] = c.next++;
                int x = c.id[static_cast<std::size_t>(e.u)], y = c.id[static_cast<std::size_t>(e.v)];
                offer(std::move(c), std::minmax(x, y));
            } else {
                // Both endpoints new: the orientation only matters if one of
                // them has further edges.
                const bool symmetric = g.degree(e.u) == 1 && g.degree(e.v) == 1;
                Labelling alt = c;
                c.id[static_cast<std::size_t>(e.u)] = c.next;
                c.id[static_cast<std::size_t>(e.v)] = c.next + 1;
                c.next += 2;
                std::pair<int, int> entry{c.next - 2, c.next - 1};
                if (!symmetric) {
                    alt.id[static_cast<std::size_t>(e.v)] = alt.next;
                    alt.id[static_cast<std::size_t>(e.u)] = alt.next + 1;
                    alt.next += 2;
                    offer(std::move(alt), entry);
                }
                offer(std::move(c), entry);
            }
        }
        code.push_back(best.first);
        code.push_back(best.second);
        cands = std::move(next_cands);
    }
    Labelling& chosen = cands.front();
    for (int v = 0; v < n; ++v)
        if (chosen.id[static_cast<std::size_t>(v)] < 0) chosen.id[static_cast<std::size_t>(v)] = chosen.next++;
    code.insert(code.begin(), n);
    return {std::move(code), std::move(chosen.id)};
}

std::pair<std::vector<int>, std::vector<int>> canonical_labelling(const Bigraph& b) {
    const Graph& g = b.graph();
    const int n = g.vertex_count();
    std::vector<int> id(static_cast<std::size_t>(n), -1);
    int next = 0;
    std::vector<int> code;
    int lefts = 0;
    for (int v = 0; v < n; ++v) lefts += b.side(v) == Side::Left ? 1 : 0;
    code.push_back(lefts);
    code.push_back(n - lefts);
    for (int r = 0; r < g.edge_count(); ++r) {
        int x = b.left_end(r), y = b.right_end(r);
        if (id[static_cast<std::size_t>(x)] < 0) id[static_cast<std::size_t>(x)] = next++;
        if (id[static_cast<std::size_t>(y)] < 0) id[static_cast<std::size_t>(y)] = next++;
        code.push_back(id[static_cast<std::size_t>(x)]);
        code.push_back(id[static_cast<std::size_t>(y)]);
    }
    // Isolated vertices: lefts first, then rights.
    for (Side s : {Side::Left, Side::Right})
        for (int v = 0; v < n; ++v)
            if (id[static_cast<std::size_t>(v)] < 0 && b.side(v) == s) id[static_cast<std::size_t>(v)] = next++;
    return {std::move(code), std::move(id)};
}

template <class G>
std::vector<int> compose_isomorphism(const G& a, const G& b) {
    auto [ca, la] = canonical_labelling(a);
    auto [cb, lb] = canonical_labelling(b);
    if (ca != cb) return {};
    std::vector<int> inv(lb.size());
    for (std::size_t v = 0; v < lb.size(); ++v) inv[static_cast<std::size_t>(lb[v])] = static_cast<int>(v);
    std::vector<int> map(la.size());
    for (std::size_t v = 0; v < la.size(); ++v) map[v] = inv[static_cast<std::size_t>(la[v])];
    return map;
}

}  // namespace

std::vector<int> canonical_code(const Graph& g) { return canonical_labelling(g).first; }
std::vector<int> canonical_code(const Bigraph& b) { return canonical_labelling(b).first; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_code(a) == canonical_code(b);
}

bool is_isomorphic(const Bigraph& a, const Bigraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_code(a) == canonical_code(b);
}

std::vector<int> find_isomorphism(const Graph& a, const Graph& b) { return compose_isomorphism(a, b); }
std::vector<int> find_isomorphism(const Bigraph& a, const Bigraph& b) { return compose_isomorphism(a, b); }

}  // namespace eog
