#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library's search routines.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "eog/graph.hpp"
#include "eog/matrix01.hpp"

namespace oracle {

// Plain adjacency with ranks; -1 for non-edges.
struct Ranks {
    int n = 0;
    std::vector<int> r;
    explicit Ranks(const eog::Graph& g) : n(g.vertex_count()), r(static_cast<std::size_t>(n * n), -1) {
        for (int k = 0; k < g.edge_count(); ++k) {
            const auto& e = g.edge(k);
            r[static_cast<std::size_t>(e.u * n + e.v)] = k;
            r[static_cast<std::size_t>(e.v * n + e.u)] = k;
        }
    }
    int at(int u, int v) const { return r[static_cast<std::size_t>(u * n + v)]; }
};

// Whether map (pattern vertex -> host vertex, injective) sends edges to
// edges with the same relative order.
inline bool order_preserving(const eog::Graph& h, const Ranks& gr, const std::vector<int>& map) {
    int prev = -1;
    for (const auto& e : h.edges()) {
        const int k = gr.at(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]);
        if (k <= prev) return false;
        prev = k;
    }
    return true;
}

// Calls visit for every injective map h -> g (h's isolated vertices included).
inline void for_each_injection(int hn, int gn, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> map(static_cast<std::size_t>(hn));
    std::vector<char> used(static_cast<std::size_t>(gn), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == hn) {
            visit(map);
            return;
        }
        for (int v = 0; v < gn; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            map[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    if (hn <= gn) rec(0);
}

inline long long count_embeddings(const eog::Graph& g, const eog::Graph& h,
                                  const std::vector<eog::Side>* gs = nullptr,
                                  const std::vector<eog::Side>* hs = nullptr) {
    const Ranks gr(g);
    long long count = 0;
    for_each_injection(h.vertex_count(), g.vertex_count(), [&](const std::vector<int>& map) {
        if (gs && hs) {
            for (std::size_t i = 0; i < map.size(); ++i)
                if ((*hs)[i] != (*gs)[static_cast<std::size_t>(map[i])]) return;
        }
        if (order_preserving(h, gr, map)) ++count;
    });
    return count;
}

inline bool contains(const eog::Graph& g, const eog::Graph& h) { return count_embeddings(g, h) > 0; }

inline bool contains(const eog::Bigraph& g, const eog::Bigraph& h) {
    return count_embeddings(g.graph(), h.graph(), &g.sides(), &h.sides()) > 0;
}

// Order-preserving isomorphism by trying every vertex permutation.
inline bool isomorphic(const eog::Graph& a, const eog::Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int k = 0; k < a.edge_count() && ok; ++k) {
            const auto& e = a.edge(k);
            ok = b.rank_between(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]) == k;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ex_<(n, h) by growing every sequence of distinct pairs (each new edge
// above the previous ones) and cutting as soon as the prefix contains h.
inline int extremal(int n, const eog::Graph& h) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<eog::Edge> edges;
    std::vector<char> used(pairs.size(), 0);
    int best = 0;
    std::function<void()> rec = [&] {
        best = std::max(best, static_cast<int>(edges.size()));
        if (best == static_cast<int>(pairs.size())) return;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (used[i]) continue;
            edges.push_back({pairs[i].first, pairs[i].second, static_cast<long long>(edges.size())});
            if (!oracle::contains(eog::Graph(n, edges), h)) {
                used[i] = 1;
                rec();
                used[i] = 0;
            }
            edges.pop_back();
        }
    };
    rec();
    return best;
}

// Submatrix containment by trying every row and column selection.
inline bool matrix_contains(const eog::Matrix01& a, const eog::Matrix01& b) {
    const int r = a.rows(), c = a.cols(), br = b.rows(), bc = b.cols();
    if (br > r || bc > c) return false;
    std::vector<int> rows(static_cast<std::size_t>(br)), cols(static_cast<std::size_t>(bc));
    std::function<bool(int, int)> pick_cols;
    std::function<bool(int, int)> pick_rows = [&](int i, int from) -> bool {
        if (i == br) return pick_cols(0, 0);
        for (int x = from; x < r; ++x) {
            rows[static_cast<std::size_t>(i)] = x;
            if (pick_rows(i + 1, x + 1)) return true;
        }
        return false;
    };
    pick_cols = [&](int j, int from) -> bool {
        if (j == bc) {
            for (int i = 0; i < br; ++i)
                for (int k = 0; k < bc; ++k)
                    if (b.at(i, k) && !a.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(k)]))
                        return false;
            return true;
        }
        for (int x = from; x < c; ++x) {
            cols[static_cast<std::size_t>(j)] = x;
            if (pick_cols(j + 1, x + 1)) return true;
        }
        return false;
    };
    return pick_rows(0, 0);
}

inline void for_each_matrix(int rows, int cols, const std::function<void(const eog::Matrix01&)>& visit) {
    const int cells = rows * cols;
    for (long long mask = 0; mask < (1LL << cells); ++mask) {
        eog::Matrix01 m(rows, cols);
        for (int k = 0; k < cells; ++k)
            if (mask >> k & 1) m.set(k / cols, k % cols);
        visit(m);
    }
}

inline int eex(int n, const eog::Matrix01& b) {
    int best = 0;
    for_each_matrix(n, n, [&](const eog::Matrix01& a) {
        if (a.ones() > best && !matrix_contains(a, b)) best = a.ones();
    });
    return best;
}

// Edge-ordered bigraphs up to isomorphism with exactly m edges and no
// isolated vertices. With the edge order fixed, an isomorphism class is a
// sequence of (left, right) pairs with vertices numbered by first use.
inline std::set<std::vector<std::pair<int, int>>> bigraph_classes(int m) {
    std::set<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> seq;
    std::function<void(int, int)> rec = [&](int nl, int nr) {
        if (static_cast<int>(seq.size()) == m) {
            out.insert(seq);
            return;
        }
        for (int l = 0; l <= nl; ++l)
            for (int r = 0; r <= nr; ++r) {
                if (std::find(seq.begin(), seq.end(), std::pair{l, r}) != seq.end()) continue;
                seq.emplace_back(l, r);
                rec(std::max(nl, l + 1), std::max(nr, r + 1));
                seq.pop_back();
            }
    };
    rec(0, 0);
    return out;
}

}  // namespace oracle
