#pragma once

// Recognizers for semi-caterpillars and right caterpillars, the order
// chromatic number 2 test for forests, and the linear / n log n dichotomy
// classifiers for connected edge-ordered graphs and paths.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eog/containment.hpp"
#include "eog/graph.hpp"

namespace eog {

/// Every consecutive pair of edges is adjacent or joined by a single larger
/// edge, and the underlying graph is a tree. Throws on edgeless input.
bool is_semi_caterpillar(const Graph& g);

/// Semi-caterpillar whose right vertices are all close.
bool is_right_caterpillar(const Bigraph& b);

/// One extension: pendant edges added below the smallest edge `base`, the
/// ones at its left end below the ones at its right end. Ranks refer to the
/// certified bigraph.
struct ExtensionStep {
    int base = 0;
    std::vector<int> left;
    std::vector<int> right;
};

/// Steps in the order they are applied to the single edge T0.
struct ExtensionSequence {
    std::vector<ExtensionStep> steps;

    int depth() const { return static_cast<int>(steps.size()); }
};

/// Shortest extension sequence producing b from T0, or nullopt when b is
/// not reachable (equivalently, not a right caterpillar).
std::optional<ExtensionSequence> peel_extensions(const Bigraph& b);

/// The peeling used in the classical argument: strip the smallest edge when
/// the two smallest edges meet, otherwise everything below the edge joining
/// them. Always succeeds on right caterpillars but need not be shortest.
std::optional<ExtensionSequence> peel_extensions_greedy(const Bigraph& b);

/// Rebuilds a bigraph from T0 using only the step shapes.
Bigraph replay(const ExtensionSequence& seq);

/// The single-edge bigraph.
Bigraph single_edge_bigraph();

/// A proper 2-colouring with every vertex of colour `close_class` close.
struct CloseColouring {
    std::vector<int> colour;
    int close_class = 0;
};

/// Order chromatic number 2 test for forests. Throws on non-forests or
/// edgeless input.
std::optional<CloseColouring> ocn2_forest_test(const Graph& forest);

/// Connected and avoids P4^{213}, P5^{1342}, P5^{1432}. Throws unless the
/// input is a forest that passes ocn2_forest_test.
bool semi_via_forbidden_paths(const Graph& g);

/// The three paths of the forbidden-path characterization.
const std::vector<Graph>& semi_caterpillar_obstructions();

/// Alternative right caterpillar test for bigraphs over a semi-caterpillar:
/// the right end of every bridging edge lies on the larger of the two
/// consecutive edges it joins. Throws if the underlying graph is not a
/// semi-caterpillar.
bool alt_right_caterpillar_check(const Bigraph& b);

bool is_monotone(const Graph& path);
/// Monotone with the two smallest or the two largest labels swapped; needs
/// at least three edges (shorter paths are never flipped).
bool is_flipped(const Graph& path);

enum class GrowthClass { Linear, OmegaNLogN };

std::string to_string(GrowthClass c);

struct LinearEvidence {
    bool reversed = false;  // the semi-caterpillar is reverse(G) rather than G
    CloseColouring colouring;
    Bigraph right_caterpillar;  // bipartition of G (or its reverse)
    ExtensionSequence extensions;
};

struct CycleEvidence {
    std::vector<int> cycle;  // vertices in cyclic order
};

struct PathWitness {
    std::string pattern;  // "P:213" etc.
    Embedding embedding;
};

/// Neither G nor reverse(G) is a semi-caterpillar: each contains one of the
/// three obstruction paths.
struct ForbiddenPathEvidence {
    PathWitness forward;
    PathWitness reversed;
};

/// No proper 2-colouring has an all-close colour class (order chromatic
/// number above 2).
struct ColouringFailure {};

using Evidence = std::variant<LinearEvidence, CycleEvidence, ForbiddenPathEvidence, ColouringFailure>;

struct DichotomyVerdict {
    GrowthClass growth = GrowthClass::Linear;
    Evidence evidence;
    std::string summary;
};

/// Throws on disconnected or edgeless input.
DichotomyVerdict classify_connected(const Graph& g);

/// Growth class from the monotone / flipped templates; evidence from
/// classify_connected. Needs a path with at least two edges.
DichotomyVerdict classify_path(const Graph& path);

/// Re-derives the evidence against g.
bool check_verdict(const Graph& g, const DichotomyVerdict& verdict);

/// 4 * depth^2 * |V(T)| * n: the explicit edge bound for n-vertex graphs
/// avoiding the graph underlying a right caterpillar T. Not tight.
long long linear_upper_bound(const Bigraph& right_caterpillar, long long n);

}  // namespace eog
