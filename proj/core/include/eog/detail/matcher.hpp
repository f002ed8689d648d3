#pragma once

// Backtracking search for order-preserving embeddings.
//
// Pattern edges are placed in increasing rank; the host rank of every placed
// edge must exceed the host rank of the previous one, so order consistency is
// checked incrementally. Host types expose vertex_count(), edge_count(),
// rank_between(u, v), incident(v) (ascending ranks) and endpoints(rank).

#include <span>
#include <utility>
#include <vector>

#include "eog/graph.hpp"

namespace eog::detail {

struct Pattern {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // rank order
    std::vector<int> isolated;
    std::vector<Side> sides;  // empty: no side constraint

    static Pattern from(const Graph& h) {
        Pattern p;
        p.vertex_count = h.vertex_count();
        for (const Edge& e : h.edges()) p.edges.emplace_back(e.u, e.v);
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) == 0) p.isolated.push_back(v);
        return p;
    }
    static Pattern from(const Bigraph& h) {
        Pattern p = from(h.graph());
        p.sides = h.sides();
        return p;
    }
};

template <class Host>
class Matcher {
public:
    Matcher(const Pattern& p, const Host& host, const std::vector<Side>* host_sides = nullptr)
        : p_(p), host_(host), host_sides_(host_sides),
          map_(static_cast<std::size_t>(p.vertex_count), -1),
          used_(static_cast<std::size_t>(host.vertex_count()), 0) {}

    /// Calls `visit(map)` for every embedding extending the fixed assignments
    /// in `pre` (pattern vertex -> host vertex); stops when visit returns
    /// false. Returns false iff stopped early.
    template <class Visit>
    bool run(Visit&& visit, std::span<const std::pair<int, int>> pre = {}) {
        for (auto [a, w] : pre) {
            if (!allowed(a, w) || used_[static_cast<std::size_t>(w)]) {
                undo(pre);
                return true;
            }
            assign(a, w);
        }
        bool r = place(0, -1, visit);
        undo(pre);
        return r;
    }

    long long nodes() const { return nodes_; }

private:
    bool allowed(int a, int w) const {
        if (p_.sides.empty()) return true;
        return (*host_sides_)[static_cast<std::size_t>(w)] == p_.sides[static_cast<std::size_t>(a)];
    }
    void assign(int a, int w) {
        map_[static_cast<std::size_t>(a)] = w;
        used_[static_cast<std::size_t>(w)] = 1;
    }
    void release(int a) {
        used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(a)])] = 0;
        map_[static_cast<std::size_t>(a)] = -1;
    }
    void undo(std::span<const std::pair<int, int>> pre) {
        for (auto [a, w] : pre)
            if (map_[static_cast<std::size_t>(a)] == w) release(a);
    }
    bool free_for(int a, int w) const { return !used_[static_cast<std::size_t>(w)] && allowed(a, w); }

    template <class Visit>
    bool place(std::size_t i, int prev, Visit& visit) {
        ++nodes_;
        const int k = static_cast<int>(p_.edges.size());
        if (i == p_.edges.size()) return place_isolated(0, visit);
        // Leave room for the remaining pattern edges.
        const int limit = host_.edge_count() - (k - static_cast<int>(i));
        auto [a, b] = p_.edges[i];
        const int ma = map_[static_cast<std::size_t>(a)];
        const int mb = map_[static_cast<std::size_t>(b)];
        if (ma >= 0 && mb >= 0) {
            int r = host_.rank_between(ma, mb);
            if (r > prev && r <= limit) return place(i + 1, r, visit);
            return true;
        }
        if (ma >= 0 || mb >= 0) {
            const int known = ma >= 0 ? ma : mb;
            const int fresh = ma >= 0 ? b : a;
            for (int r : host_.incident(known)) {
                if (r <= prev) continue;
                if (r > limit) break;
                auto [x, y] = host_.endpoints(r);
                int w = x == known ? y : x;
                if (!free_for(fresh, w)) continue;
                assign(fresh, w);
                bool go = place(i + 1, r, visit);
                release(fresh);
                if (!go) return false;
            }
            return true;
        }
        for (int r = prev + 1; r <= limit; ++r) {
            auto [x, y] = host_.endpoints(r);
            for (int flip = 0; flip < 2; ++flip) {
                int wa = flip ? y : x, wb = flip ? x : y;
                if (!free_for(a, wa) || !free_for(b, wb)) continue;
                assign(a, wa);
                assign(b, wb);
                bool go = place(i + 1, r, visit);
                release(b);
                release(a);
                if (!go) return false;
            }
        }
        return true;
    }

    template <class Visit>
    bool place_isolated(std::size_t j, Visit& visit) {
        if (j == p_.isolated.size()) return visit(static_cast<const std::vector<int>&>(map_));
        const int a = p_.isolated[j];
        for (int w = 0; w < host_.vertex_count(); ++w) {
            if (!free_for(a, w)) continue;
            assign(a, w);
            bool go = place_isolated(j + 1, visit);
            release(a);
            if (!go) return false;
        }
        return true;
    }

    const Pattern& p_;
    const Host& host_;
    const std::vector<Side>* host_sides_;
    std::vector<int> map_;
    std::vector<char> used_;
    long long nodes_ = 0;
};

/// Adapter exposing eog::Graph as a matcher host.
struct GraphHost {
    const Graph& g;
    int vertex_count() const { return g.vertex_count(); }
    int edge_count() const { return g.edge_count(); }
    int rank_between(int u, int v) const { return g.rank_between(u, v); }
    const std::vector<int>& incident(int v) const { return g.incident(v); }
    std::pair<int, int> endpoints(int r) const { return {g.edge(r).u, g.edge(r).v}; }
};

}  // namespace eog::detail
