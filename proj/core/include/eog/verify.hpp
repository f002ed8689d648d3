#pragma once

// Property and oracle sweeps over the whole library. Each suite reports the
// number of instances checked, the failures (with a serialized
// counterexample that re-parses with load_graph / Matrix01::parse) and the
// tightest slack seen for each numeric bound.

#include <cstdint>
#include <string>
#include <vector>

#include "eog/graph.hpp"
#include "eog/turan.hpp"

namespace eog {

struct VerifyOptions {
    std::uint64_t seed = 7;
    int samples = 1000;
    int exhaustive_edges = 8;  // bigraph sweeps
    int tree_edges = 6;        // tree sweeps
    int max_vertices = 40;     // random bigraphs
    Budget budget;
};

struct VerifyFailure {
    std::string check;
    std::string counterexample;
};

struct BoundMargin {
    std::string bound;
    long long instances = 0;
    long long worst_slack = 0;  // min over instances of bound - value
};

struct VerifyReport {
    std::string suite;
    long long instances = 0;
    long long failure_count = 0;
    std::vector<VerifyFailure> failures;  // the first few
    std::vector<BoundMargin> margins;
    std::vector<std::pair<std::string, long long>> counters;  // informational

    bool passed() const { return failure_count == 0; }
    void fail(std::string check, std::string counterexample);
    void margin(const std::string& bound, long long limit, long long value);
};

/// core, containment, semi, equivalence, main, leaning, extraction,
/// inclined, lem1, k33, add, matrix.
const std::vector<std::string>& suite_names();

/// One suite by name, or every suite for "all". Throws on unknown names.
std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& opt);

VerifyReport verify_core(const VerifyOptions& opt);
VerifyReport verify_containment(const VerifyOptions& opt);
VerifyReport verify_semi(const VerifyOptions& opt);
VerifyReport verify_equivalence(const VerifyOptions& opt);
VerifyReport verify_main(const VerifyOptions& opt);
VerifyReport verify_leaning(const VerifyOptions& opt);
VerifyReport verify_extraction(const VerifyOptions& opt);
VerifyReport verify_inclined(const VerifyOptions& opt);
VerifyReport verify_lem1(const VerifyOptions& opt);
VerifyReport verify_k33(const VerifyOptions& opt);
VerifyReport verify_add(const VerifyOptions& opt);
VerifyReport verify_matrix(const VerifyOptions& opt);

/// Random bigraph with up to max_vertices vertices, a random density and a
/// uniformly random edge order.
Bigraph random_bigraph(Rng& rng, int max_vertices);
/// G(n, p) with a uniformly random edge order.
Graph random_graph(Rng& rng, int n, double p);
/// Uniform random labelled tree (Pruefer code) with m edges and random order.
Graph random_tree(Rng& rng, int m);

}  // namespace eog
