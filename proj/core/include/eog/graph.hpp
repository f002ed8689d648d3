#pragma once

// Edge-ordered graphs and bigraphs.
//
// A graph is a simple graph on vertices 0..n-1 whose edges carry distinct
// integer labels. Every algorithm in this library only looks at the relative
// order of labels, so edges are stored sorted by label and addressed by their
// rank (0 = smallest edge).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eog {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
    long long label = 0;

    int other(int w) const { return w == u ? v : u; }
    bool touches(int w) const { return w == u || w == v; }
};

class Graph {
public:
    Graph() = default;

    /// Throws eog::Error on loops, parallel edges, repeated labels, or
    /// out-of-range endpoints. `names` may be empty (vertices get their index
    /// as name) or hold one entry per vertex.
    Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> names = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }

    /// Edges sorted by label; index == rank.
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int rank) const { return edges_[static_cast<std::size_t>(rank)]; }

    /// Rank of the edge {u, v}, or -1.
    int rank_between(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)]; }
    bool adjacent(int u, int v) const { return rank_between(u, v) >= 0; }

    /// Ranks of the edges at v, ascending.
    const std::vector<int>& incident(int v) const { return inc_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Same graph with labels replaced by ranks 1..m.
    Graph normalized() const;

    /// Subgraph spanned by the given edge ranks; keeps every vertex.
    Graph edge_subgraph(std::span<const int> ranks) const;

    /// Drops vertices of degree zero (renumbering the rest in index order).
    Graph without_isolated() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> adj_;
    std::vector<std::string> names_;
};

enum class Side : std::uint8_t { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// An edge-ordered graph with a proper left/right colouring.
class Bigraph {
public:
    Bigraph() = default;
    Bigraph(Graph graph, std::vector<Side> sides);

    const Graph& graph() const { return graph_; }
    Side side(int v) const { return sides_[static_cast<std::size_t>(v)]; }
    const std::vector<Side>& sides() const { return sides_; }

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    int left_end(int rank) const;
    int right_end(int rank) const;

    /// Same graph with every side swapped.
    Bigraph swapped() const;

private:
    Graph graph_;
    std::vector<Side> sides_;
};

// Structural queries ---------------------------------------------------------

std::vector<int> component_ids(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);
std::vector<int> degrees(const Graph& g);

/// Vertices visited along a path graph, starting from the endpoint with the
/// smaller index. Throws if g is not a path.
std::vector<int> path_vertices(const Graph& g);

/// Edge ranks read along a path (see path_vertices).
std::vector<int> path_ranks(const Graph& g);

/// Graph with the edge order reversed.
Graph reverse(const Graph& g);
Bigraph reverse(const Bigraph& b);

/// A vertex is close when its incident edges are consecutive in the edge order.
bool is_close(const Graph& g, int v);
std::vector<int> close_vertices(const Graph& g);

/// Pairs of ranks (r, r + 1).
std::vector<std::pair<int, int>> consecutive_pairs(const Graph& g);

/// Both bipartitions of a connected graph, or none if it has an odd cycle.
/// Vertex 0 is Left in the first result. Throws on disconnected input.
std::vector<Bigraph> bipartitions(const Graph& g);

/// Proper 2-colouring of every component (vertex of smallest index in each
/// component gets colour 0), or empty when g is not bipartite.
std::vector<int> two_colouring(const Graph& g);

// Isomorphism ----------------------------------------------------------------

/// Canonical code; equal codes <=> isomorphic (order-preserving) graphs.
std::vector<int> canonical_code(const Graph& g);
std::vector<int> canonical_code(const Bigraph& b);

bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const Bigraph& a, const Bigraph& b);

/// Vertex bijection a -> b preserving the edge order (and sides), if any.
std::vector<int> find_isomorphism(const Graph& a, const Graph& b);
std::vector<int> find_isomorphism(const Bigraph& a, const Bigraph& b);

}  // namespace eog
