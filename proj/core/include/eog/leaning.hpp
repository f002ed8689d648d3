#pragma once

// Leaning edges, iterated leaning subgraphs, constructive extraction of right
// caterpillars, and the inclined-edge decomposition used for the 13254 path.
//
// Edge sets are sorted vectors of ranks into the host bigraph.

#include <optional>
#include <vector>

#include "eog/classify.hpp"
#include "eog/containment.hpp"
#include "eog/graph.hpp"

namespace eog {

enum class Lean { Left, Right };

/// `near` holds c edges at the left end of the edge, `far` c edges at its
/// right end, all smaller than the edge. Left-leaning: every far edge is
/// larger than every near edge. Right-leaning: the reverse.
struct LeaningWitness {
    std::vector<int> near;
    std::vector<int> far;
};

struct LeaningClass {
    std::optional<LeaningWitness> left;
    std::optional<LeaningWitness> right;

    bool leaning() const { return left || right; }
};

/// Leaning status of `rank` inside the subgraph `edges` (must contain rank).
LeaningClass leaning_class(const Bigraph& b, const std::vector<int>& edges, int rank, int c);
/// Same, within the whole bigraph. Throws if rank is out of range or c < 1.
LeaningClass leaning_class(const Bigraph& b, int rank, int c);

std::vector<int> non_leaning_edges(const Bigraph& b, int c);

/// levels[0] is every edge; levels[j] holds the c-leaning edges (on `side`)
/// of levels[j - 1].
struct IterateChain {
    Lean side = Lean::Left;
    int c = 1;
    std::vector<std::vector<int>> levels;
};

IterateChain iterate(const Bigraph& b, int c, int i, Lean side);

/// Edges in neither the i-th left nor the i-th right iterate.
std::vector<int> residual_edges(const Bigraph& b, int c, int i);

/// Embeds the right caterpillar `t` into `host` whenever the
/// |V(t)|-left iterate of depth(t) is non-empty; nullopt otherwise. Throws if
/// t is not a right caterpillar.
std::optional<Embedding> extract_caterpillar(const Bigraph& host, const Bigraph& t);

enum class Incline { Left, Right, None };

struct InclinedPartition {
    /// Second smallest incident rank; -1 for vertices of degree at most one.
    std::vector<int> vertex_label;
    std::vector<Incline> edge_class;  // by rank

    int count(Incline k) const;
};

InclinedPartition inclined_partition(const Bigraph& b);

/// Subgraph of left (right) inclined edges, keeping every vertex.
Bigraph inclined_subgraph(const Bigraph& b, Incline which);

/// Lower/upper half split with per-vertex extremes stripped, intersected
/// with the left inclined part of what remains.
struct HalvesDecomposition {
    std::vector<int> lower;     // A''
    std::vector<int> upper;     // B''
    std::vector<int> leftover;  // every other edge
    int lower_vertices = 0;     // non-isolated vertices of A''
    int upper_vertices = 0;
    bool separated = true;      // no vertex meets both A'' and B''
};

HalvesDecomposition halves_decomposition(const Bigraph& b);

/// The left inclined subgraph avoids P5^{-2143}.
bool lem1_check(const Bigraph& b);
/// The right inclined subgraph avoids P5^{+2143}.
bool co_check(const Bigraph& b);

}  // namespace eog
