#pragma once

// Order-respecting subgraph containment.

#include <functional>
#include <optional>
#include <vector>

#include "eog/graph.hpp"

namespace eog {

/// vertex_map[h] is the host vertex that pattern vertex h lands on.
struct Embedding {
    std::vector<int> vertex_map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Throws eog::Error when h has no edges.
bool contains(const Graph& g, const Graph& h);
bool contains(const Bigraph& g, const Bigraph& h);

std::optional<Embedding> find_embedding(const Graph& g, const Graph& h);
std::optional<Embedding> find_embedding(const Bigraph& g, const Bigraph& h);

/// Streams every embedding; stop early by returning false from `visit`.
void for_each_embedding(const Graph& g, const Graph& h, const std::function<bool(const Embedding&)>& visit);
void for_each_embedding(const Bigraph& g, const Bigraph& h, const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> enumerate_embeddings(const Graph& g, const Graph& h);
std::vector<Embedding> enumerate_embeddings(const Bigraph& g, const Bigraph& h);

/// Independent check: injective, edges to edges, relative order preserved.
bool is_valid_embedding(const Graph& g, const Graph& h, const Embedding& emb);
bool is_valid_embedding(const Bigraph& g, const Bigraph& h, const Embedding& emb);

}  // namespace eog
