#pragma once

// Exact small-n extremal numbers ex_<(n, H), the pendant extension of a
// pattern, the 5-edge path table, the canonical K_{3,3} sampler and
// isomorphism-free enumeration of edge-ordered graphs and bigraphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eog/classify.hpp"
#include "eog/graph.hpp"

namespace eog {

enum class SearchStatus { Exact, LowerBoundOnly };

std::string to_string(SearchStatus s);

/// Zero means unlimited. Results are reproducible for a fixed thread count;
/// completed (Exact) runs report the same value and node count for any
/// thread count.
struct Budget {
    long long nodes = 0;
    double seconds = 0;
    int threads = 1;
};

struct TuranResult {
    int value = 0;
    Graph witness{0, {}};
    SearchStatus status = SearchStatus::Exact;
    long long nodes = 0;
};

/// Largest number of edges of an n-vertex edge-ordered graph avoiding h.
/// Throws if h has no edges or n < 1.
TuranResult exact_ex(int n, const Graph& h, const Budget& budget = {});

enum class PendantEnd { End1, End2 };

/// Adds a new vertex joined to one end of h's smallest edge by an edge below
/// every other edge. End1 is the first endpoint of that edge as stored
/// (for paths built by make_path: the endpoint nearer the path start).
Graph pendant_extension(const Graph& h, PendantEnd end);

struct Table1Row {
    std::string labels;  // e.g. "13254"
    int chromatic = 2;   // 0 encodes infinity
    std::string bound;   // asymptotic estimate as text
    GrowthClass expected = GrowthClass::OmegaNLogN;
};

/// All 32 edge-ordered 5-edge paths up to isomorphism and reversal.
const std::vector<Table1Row>& table1_rows();

struct Table1Entry {
    Table1Row row;
    GrowthClass verdict = GrowthClass::Linear;
    bool ocn2 = false;
    std::vector<TuranResult> values;  // values[k] is for n = k + 1
    std::string ground_truth;         // "C(n,2)" or "no published ground truth"
};

/// Rows to compute: all when empty. Exact values for n = 1..max_n.
std::vector<Table1Entry> table1_report(int max_n, const Budget& budget,
                                       const std::vector<std::string>& only = {});
std::string table1_csv(const std::vector<Table1Entry>& entries);

struct K33Result {
    int samples = 0;
    int containing = 0;
    std::optional<Graph> counterexample;

    double rate() const { return samples ? static_cast<double>(containing) / samples : 0.0; }
};

/// K_{3,3,3} on parts u, v, w with L(v_i w_j) = 3i + j for the nine v-w
/// edges placed below (or above, when `largest`) every other edge; the
/// other 18 labels are shuffled. Counts samples containing P6^{21354}.
K33Result k33_canonical_sample(std::uint64_t seed, int samples, bool largest = false);
Graph k33_canonical_graph(std::uint64_t seed, bool largest);

/// One representative per isomorphism class of edge-ordered graphs on n
/// labelled-free vertices with at most m_max edges (isolated vertices
/// padded to n), starting with the empty graph. Children of a graph are
/// visited only when the visitor returns true for it.
void enumerate_eogs(int n, int m_max, const std::function<bool(const Graph&)>& visit);

/// One representative per isomorphism class of edge-ordered bigraphs without
/// isolated vertices and with 1..m_max edges.
void enumerate_bigraphs(int m_max, const std::function<bool(const Bigraph&)>& visit);

/// Seeded generator used by every randomized routine. Only the raw
/// mt19937_64 stream is used, so sequences agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t next() { return gen_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return next() >> 63; }
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace eog
