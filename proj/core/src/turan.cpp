#include "eog/turan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "eog/containment.hpp"
#include "eog/detail/matcher.hpp"
#include "eog/io.hpp"

namespace eog {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below needs a positive bound");
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
}

std::string to_string(SearchStatus s) { return s == SearchStatus::Exact ? "Exact" : "LowerBoundOnly"; }

namespace {

// Edge-ordered graph on a fixed vertex pool that grows and shrinks at its
// largest edge. Doubles as a matcher host.
class Pool {
public:
    explicit Pool(int n)
        : n_(n), adj_(static_cast<std::size_t>(n * n), -1), inc_(static_cast<std::size_t>(n)) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int rank_between(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)]; }
    const std::vector<int>& incident(int v) const { return inc_[static_cast<std::size_t>(v)]; }
    std::pair<int, int> endpoints(int r) const { return ends_[static_cast<std::size_t>(r)]; }
    int degree(int v) const { return static_cast<int>(inc_[static_cast<std::size_t>(v)].size()); }
    const std::vector<std::pair<int, int>>& edges() const { return ends_; }

    void push(int u, int v) {
        const int r = edge_count();
        adj_[static_cast<std::size_t>(u * n_ + v)] = adj_[static_cast<std::size_t>(v * n_ + u)] = r;
        inc_[static_cast<std::size_t>(u)].push_back(r);
        inc_[static_cast<std::size_t>(v)].push_back(r);
        ends_.emplace_back(u, v);
    }
    void pop() {
        auto [u, v] = ends_.back();
        ends_.pop_back();
        adj_[static_cast<std::size_t>(u * n_ + v)] = adj_[static_cast<std::size_t>(v * n_ + u)] = -1;
        inc_[static_cast<std::size_t>(u)].pop_back();
        inc_[static_cast<std::size_t>(v)].pop_back();
    }

    Graph to_graph() const {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < ends_.size(); ++i)
            es.push_back({ends_[i].first, ends_[i].second, static_cast<long long>(i + 1)});
        return Graph(n_, std::move(es));
    }

    // Only isolated vertices and single-edge components have non-trivial
    // automorphisms, so a new edge is canonical iff each endpoint is the
    // least vertex of its orbit.
    bool canonical_child(int x, int y) const {
        const int dx = degree(x), dy = degree(y);
        if (dx == 0 && dy == 0) {
            int seen = 0;
            for (int w = 0; w < n_ && seen < 2; ++w) {
                if (degree(w) != 0) continue;
                if (w != x && w != y) return false;
                ++seen;
            }
            return true;
        }
        return least_in_orbit(x) && least_in_orbit(y);
    }

private:
    bool least_in_orbit(int v) const {
        const int d = degree(v);
        if (d == 0) {
            for (int w = 0; w < v; ++w)
                if (degree(w) == 0) return false;
            return true;
        }
        if (d == 1) {
            auto [a, b] = endpoints(incident(v).front());
            int w = a == v ? b : a;
            if (degree(w) == 1) return v < w;
        }
        return true;
    }

    int n_;
    std::vector<int> adj_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::pair<int, int>> ends_;
};

// Does pool contain the pattern with the pattern's largest edge on the
// pool's largest edge?
bool anchored_contains(const Pool& pool, const detail::Pattern& p) {
    auto [x, y] = pool.endpoints(pool.edge_count() - 1);
    auto [a, b] = p.edges.back();
    detail::Matcher<Pool> m(p, pool);
    auto stop = [](const std::vector<int>&) { return false; };
    const std::pair<int, int> fwd[] = {{a, x}, {b, y}};
    if (!m.run(stop, fwd)) return true;
    const std::pair<int, int> bwd[] = {{a, y}, {b, x}};
    return !m.run(stop, bwd);
}

using Clock = std::chrono::steady_clock;

struct BudgetState {
    Budget budget;
    Clock::time_point start = Clock::now();
    std::atomic<long long> nodes{0};
    std::atomic<bool> expired{false};

    bool tick() {
        long long k = ++nodes;
        if (budget.nodes > 0 && k > budget.nodes) expired = true;
        if (budget.seconds > 0 && (k & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > budget.seconds)
            expired = true;
        return !expired.load(std::memory_order_relaxed);
    }
};

struct Node {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> live;  // pair ids
};

class Searcher {
public:
    Searcher(int n, const detail::Pattern& p, const std::vector<std::pair<int, int>>& pairs, BudgetState& bs)
        : pool_(n), p_(p), pairs_(pairs), bs_(bs) {}

    void load(const Node& node) {
        while (pool_.edge_count() > 0) pool_.pop();
        for (auto [u, v] : node.edges) pool_.push(u, v);
    }

    // Live pairs of the pool after adding pair f, restricted to `from`.
    // Returns false when fewer than `need` can survive.
    bool child_live(int f, const std::vector<int>& from, std::size_t need, std::vector<int>& out) {
        out.clear();
        std::size_t left = from.size();
        for (int g : from) {
            --left;
            if (g == f) continue;
            auto [u, v] = pairs_[static_cast<std::size_t>(g)];
            pool_.push(u, v);
            bool dead = anchored_contains(pool_, p_);
            pool_.pop();
            if (!dead) out.push_back(g);
            if (out.size() + left < need) return false;
        }
        return out.size() >= need;
    }

    /// Depth-first search for a graph with at least `target` edges.
    /// `cancel` is polled once per node.
    template <class Cancel>
    bool dfs(const std::vector<int>& live, int target, long long& nodes, Cancel&& cancel) {
        ++nodes;
        if (!bs_.tick() || cancel()) {
            aborted_ = true;
            return false;
        }
        const int m = pool_.edge_count();
        if (m >= target) {
            found_ = pool_.edges();
            return true;
        }
        std::vector<int> next;
        const std::size_t need = static_cast<std::size_t>(target - m - 1);
        for (int f : live) {
            auto [x, y] = pairs_[static_cast<std::size_t>(f)];
            if (!pool_.canonical_child(x, y)) continue;
            pool_.push(x, y);
            bool ok = child_live(f, live, need, next) && dfs(next, target, nodes, cancel);
            pool_.pop();
            if (ok) return true;
            if (aborted_) return false;
        }
        return false;
    }

    // Expands nodes breadth-first up to `depth` edges. Nodes reaching the
    // target on the way are reported through found().
    std::vector<Node> frontier(const std::vector<int>& root_live, int target, int depth, long long& nodes) {
        std::vector<Node> level{{{}, root_live}};
        for (int d = 0; d < depth; ++d) {
            std::vector<Node> next_level;
            for (const Node& node : level) {
                load(node);
                ++nodes;
                if (!bs_.tick()) {
                    aborted_ = true;
                    return {};
                }
                if (pool_.edge_count() >= target) {
                    found_ = pool_.edges();
                    return {};
                }
                const std::size_t need = static_cast<std::size_t>(target - pool_.edge_count() - 1);
                std::vector<int> next;
                for (int f : node.live) {
                    auto [x, y] = pairs_[static_cast<std::size_t>(f)];
                    if (!pool_.canonical_child(x, y)) continue;
                    pool_.push(x, y);
                    if (child_live(f, node.live, need, next)) next_level.push_back({pool_.edges(), next});
                    pool_.pop();
                }
            }
            level = std::move(next_level);
        }
        return level;
    }

    Pool& pool() { return pool_; }
    bool aborted() const { return aborted_; }
    const std::optional<std::vector<std::pair<int, int>>>& found() const { return found_; }
    void reset() {
        aborted_ = false;
        found_.reset();
    }

private:
    Pool pool_;
    const detail::Pattern& p_;
    const std::vector<std::pair<int, int>>& pairs_;
    BudgetState& bs_;
    bool aborted_ = false;
    std::optional<std::vector<std::pair<int, int>>> found_;
};

struct Feasibility {
    std::optional<std::vector<std::pair<int, int>>> witness;
    bool aborted = false;
    long long nodes = 0;
};

constexpr int kFrontierDepth = 2;

Feasibility feasible(int n, const detail::Pattern& p, const std::vector<std::pair<int, int>>& pairs, int target,
                     BudgetState& bs, int threads) {
    Feasibility out;
    Searcher root(n, p, pairs, bs);
    std::vector<int> all(pairs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (static_cast<int>(all.size()) < target) return out;
    auto nodes = root.frontier(all, target, kFrontierDepth, out.nodes);
    if (root.found() || root.aborted()) {
        out.witness = root.found();
        out.aborted = root.aborted();
        return out;
    }

    const std::size_t k = nodes.size();
    std::vector<long long> counts(k, 0);
    std::vector<std::optional<std::vector<std::pair<int, int>>>> found(k);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> winner{k};
    std::atomic<bool> aborted{false};

    auto work = [&] {
        Searcher s(n, p, pairs, bs);
        for (;;) {
            const std::size_t i = next++;
            if (i >= k || aborted) return;
            if (i > winner) continue;
            s.reset();
            s.load(nodes[i]);
            bool ok = s.dfs(nodes[i].live, target, counts[i], [&] { return winner.load(std::memory_order_relaxed) < i; });
            if (ok) {
                found[i] = s.found();
                std::size_t cur = winner;
                while (i < cur && !winner.compare_exchange_weak(cur, i)) {
                }
            } else if (s.aborted() && bs.expired) {
                aborted = true;
            }
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(k)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    const std::size_t w = winner;
    if (w < k) {
        out.witness = found[w];
        for (std::size_t i = 0; i <= w; ++i) out.nodes += counts[i];
    } else {
        for (long long c : counts) out.nodes += c;
        out.aborted = aborted;
    }
    return out;
}

// Maximal avoider built by adding pairs in the given order.
std::vector<std::pair<int, int>> greedy(int n, const detail::Pattern& p, const std::vector<std::pair<int, int>>& order) {
    Pool pool(n);
    for (auto [u, v] : order) {
        pool.push(u, v);
        if (anchored_contains(pool, p)) pool.pop();
    }
    return pool.edges();
}

Graph witness_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        es.push_back({edges[i].first, edges[i].second, static_cast<long long>(i + 1)});
    return Graph(n, std::move(es));
}

}  // namespace

TuranResult exact_ex(int n, const Graph& h, const Budget& budget) {
    if (h.edge_count() == 0) throw Error("forbidden pattern must have at least one edge");
    if (n < 1) throw Error("vertex count must be positive");
    const detail::Pattern p = detail::Pattern::from(h);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int full = static_cast<int>(pairs.size());
    int threads = budget.threads;
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    BudgetState bs;
    bs.budget = budget;
    TuranResult out;
    long long nodes = 0;

    std::vector<std::pair<int, int>> best = greedy(n, p, pairs);
    Rng rng(0x5eed);
    for (int round = 0; round < 8; ++round) {
        auto order = pairs;
        rng.shuffle(order);
        auto cand = greedy(n, p, order);
        if (cand.size() > best.size()) best = std::move(cand);
    }

    auto finish = [&](SearchStatus status) {
        out.value = static_cast<int>(best.size());
        out.witness = witness_graph(n, best);
        out.status = status;
        out.nodes = nodes;
        return out;
    };
    if (static_cast<int>(best.size()) == full) return finish(SearchStatus::Exact);

    // Complete graph first: when it is attainable the strong pruning finds
    // it quickly.
    auto r = feasible(n, p, pairs, full, bs, threads);
    nodes += r.nodes;
    if (r.witness) {
        best = *r.witness;
        return finish(SearchStatus::Exact);
    }
    if (r.aborted) return finish(SearchStatus::LowerBoundOnly);
    for (int target = static_cast<int>(best.size()) + 1; target < full;) {
        r = feasible(n, p, pairs, target, bs, threads);
        nodes += r.nodes;
        if (r.aborted) return finish(SearchStatus::LowerBoundOnly);
        if (!r.witness) break;
        best = *r.witness;
        target = static_cast<int>(best.size()) + 1;
    }
    return finish(SearchStatus::Exact);
}

Graph pendant_extension(const Graph& h, PendantEnd end) {
    if (h.edge_count() == 0) throw Error("pendant extension needs an edge");
    const Graph g = h.normalized();
    const Edge& first = g.edge(0);
    const int at = end == PendantEnd::End1 ? first.u : first.v;
    const int fresh = g.vertex_count();
    std::vector<Edge> es = g.edges();
    es.push_back({at, fresh, 0});
    std::vector<std::string> names = g.names();
    if (!names.empty()) names.push_back("x" + std::to_string(fresh));
    return Graph(fresh + 1, std::move(es), std::move(names)).normalized();
}

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = [] {
        std::vector<Table1Row> r;
        auto add = [&](std::initializer_list<const char*> labels, int chi, const char* bound, GrowthClass cls) {
            for (const char* l : labels) r.push_back({l, chi, bound, cls});
        };
        const auto lin = GrowthClass::Linear, nlog = GrowthClass::OmegaNLogN;
        add({"12345", "12354"}, 2, "Theta(n)", lin);
        add({"12435", "15432", "21543", "12543"}, 2, "Theta(n log n)", nlog);
        add({"12453", "13254"}, 2, "Omega(n log n), O(n log^2 n)", nlog);
        add({"14523", "14532", "15423", "21453"}, 2, "Omega(n log n), n 2^O(sqrt(log n))", nlog);
        add({"14325", "21354"}, 3, "n^2/4 + o(n^2)", nlog);
        add({"15243", "15234", "24513", "25413", "15324", "21534", "13524", "23514", "25143",
             "24153", "14253", "12534", "15342", "14352", "13425", "13452", "13542", "25314"},
            0, "C(n,2)", nlog);
        return r;
    }();
    return rows;
}

std::vector<Table1Entry> table1_report(int max_n, const Budget& budget, const std::vector<std::string>& only) {
    std::vector<Table1Entry> out;
    for (const Table1Row& row : table1_rows()) {
        if (!only.empty() && std::find(only.begin(), only.end(), row.labels) == only.end()) continue;
        const Graph g = parse_path("P:" + row.labels);
        Table1Entry e;
        e.row = row;
        e.verdict = classify_path(g).growth;
        e.ocn2 = ocn2_forest_test(g).has_value();
        for (int n = 1; n <= max_n; ++n) e.values.push_back(exact_ex(n, g, budget));
        e.ground_truth = row.chromatic == 0 ? "C(n,2)" : "no published ground truth";
        out.push_back(std::move(e));
    }
    return out;
}

std::string table1_csv(const std::vector<Table1Entry>& entries) {
    std::ostringstream os;
    os << "labels,chromatic,bound,expected,verdict,ocn2,n,value,status,nodes,ground_truth\n";
    for (const auto& e : entries) {
        for (std::size_t k = 0; k < e.values.size(); ++k) {
            const auto& v = e.values[k];
            os << e.row.labels << ',' << (e.row.chromatic == 0 ? std::string("inf") : std::to_string(e.row.chromatic))
               << ",\"" << e.row.bound << "\"," << to_string(e.row.expected) << ',' << to_string(e.verdict) << ','
               << (e.ocn2 ? "yes" : "no") << ',' << k + 1 << ',' << v.value << ',' << to_string(v.status) << ','
               << v.nodes << ',' << e.ground_truth << '\n';
        }
    }
    return os.str();
}

namespace {

Graph make_k33(Rng& rng, bool largest) {
    // Parts u = 0..2, v = 3..5, w = 6..8; indices i, j run over 1..3.
    std::vector<Edge> canonical, rest;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) canonical.push_back({2 + i, 5 + j, 3 * i + j});
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 9; ++b) rest.push_back({a, b, 0});
    std::vector<long long> labels;
    const long long base = largest ? 0 : 12;  // canonical labels occupy 4..12
    for (int k = 1; k <= 18; ++k) labels.push_back(base + k);
    if (largest)
        for (auto& e : canonical) e.label += 18;
    rng.shuffle(labels);
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k].label = labels[k];
    std::vector<Edge> all = canonical;
    all.insert(all.end(), rest.begin(), rest.end());
    std::vector<std::string> names{"u1", "u2", "u3", "v1", "v2", "v3", "w1", "w2", "w3"};
    return Graph(9, std::move(all), std::move(names));
}

}  // namespace

Graph k33_canonical_graph(std::uint64_t seed, bool largest) {
    Rng rng(seed);
    return make_k33(rng, largest);
}

K33Result k33_canonical_sample(std::uint64_t seed, int samples, bool largest) {
    if (samples < 1) throw Error("need at least one sample");
    static const Graph pattern = parse_path("P:21354");
    Rng rng(seed);
    K33Result out;
    for (int s = 0; s < samples; ++s) {
        Graph g = make_k33(rng, largest);
        ++out.samples;
        if (contains(g, pattern)) ++out.containing;
        else if (!out.counterexample) out.counterexample = std::move(g);
    }
    return out;
}

namespace {

void grow_eogs(Pool& pool, int m_max, const std::function<bool(const Graph&)>& visit) {
    if (!visit(pool.to_graph()) || pool.edge_count() >= m_max) return;
    const int n = pool.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (pool.rank_between(x, y) >= 0 || !pool.canonical_child(x, y)) continue;
            pool.push(x, y);
            grow_eogs(pool, m_max, visit);
            pool.pop();
        }
}

struct BigraphBuilder {
    std::vector<Side> sides;
    std::vector<Edge> edges;
    std::vector<char> adj;  // lazily sized per vertex pair
    int cap = 0;

    bool has(int u, int v) const { return u < cap && v < cap && adj[static_cast<std::size_t>(u * cap + v)]; }
    void set(int u, int v, char on) {
        if (std::max(u, v) >= cap) {
            int nc = std::max(16, 2 * std::max(u, v) + 2);
            std::vector<char> na(static_cast<std::size_t>(nc * nc), 0);
            for (int a = 0; a < cap; ++a)
                for (int b = 0; b < cap; ++b) na[static_cast<std::size_t>(a * nc + b)] = adj[static_cast<std::size_t>(a * cap + b)];
            adj = std::move(na);
            cap = nc;
        }
        adj[static_cast<std::size_t>(u * cap + v)] = adj[static_cast<std::size_t>(v * cap + u)] = on;
    }
};

void grow_bigraphs(BigraphBuilder& st, int m_max, const std::function<bool(const Bigraph&)>& visit) {
    const int m = static_cast<int>(st.edges.size());
    if (m > 0) {
        Bigraph b(Graph(static_cast<int>(st.sides.size()), st.edges), st.sides);
        if (!visit(b)) return;
    }
    if (m >= m_max) return;
    const int nv = static_cast<int>(st.sides.size());
    std::vector<int> lefts, rights;
    for (int v = 0; v < nv; ++v) (st.sides[static_cast<std::size_t>(v)] == Side::Left ? lefts : rights).push_back(v);
    lefts.push_back(-1);  // a new vertex
    rights.push_back(-1);
    for (int x : lefts)
        for (int y : rights) {
            if (x >= 0 && y >= 0 && st.has(x, y)) continue;
            int xx = x, yy = y;
            if (xx < 0) {
                xx = static_cast<int>(st.sides.size());
                st.sides.push_back(Side::Left);
            }
            if (yy < 0) {
                yy = static_cast<int>(st.sides.size());
                st.sides.push_back(Side::Right);
            }
            st.edges.push_back({xx, yy, m + 1});
            st.set(xx, yy, 1);
            grow_bigraphs(st, m_max, visit);
            st.set(xx, yy, 0);
            st.edges.pop_back();
            st.sides.resize(static_cast<std::size_t>(nv));
        }
}

}  // namespace

void enumerate_eogs(int n, int m_max, const std::function<bool(const Graph&)>& visit) {
    if (n < 0 || m_max < 0) throw Error("enumeration bounds must be non-negative");
    Pool pool(n);
    grow_eogs(pool, m_max, visit);
}

void enumerate_bigraphs(int m_max, const std::function<bool(const Bigraph&)>& visit) {
    if (m_max < 0) throw Error("enumeration bound must be non-negative");
    BigraphBuilder st;
    grow_bigraphs(st, m_max, visit);
}

}  // namespace eog
