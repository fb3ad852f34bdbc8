#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altan/errors.hpp"

namespace altan {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
};

// Validates indices, rejects self-loops, deduplicates parallel edges.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Induced subgraph on vertices [0, k); edges with an endpoint >= k are dropped.
Graph prefix_subgraph(const Graph& g, int k);

// Cyclically ordered attachment tuple (repeats allowed, equality up to shifts).
struct AttachmentSet {
    std::vector<int> vertices;
    int h() const { return static_cast<int>(vertices.size()); }
    bool operator==(const AttachmentSet&) const = default;
};

// Lexicographically minimal cyclic shift.
AttachmentSet canonical_rotation(const AttachmentSet& H);

// A graph together with an attachment tuple; x_range/y_range identify the
// ring vertices added by the most recent altan step (empty at level 0).
struct AltanPair {
    Graph graph;
    AttachmentSet attachment;
    int level = 0;
    std::pair<int, int> x_range{0, 0};
    std::pair<int, int> y_range{0, 0};
};

// Validates the attachment (h >= 2, indices in range) and canonicalises it.
AltanPair make_altan_pair(Graph g, AttachmentSet H);

// One altan step: adds spoke vertices x_1..x_h at indices n..n+h-1 and ring
// vertices y_1..y_h at indices n+h..n+2h-1; the result's attachment is the
// induced tuple (y_1, ..., y_h).
AltanPair altan(const AltanPair& pair);

// k >= 0 repeated altan steps.
AltanPair iterated_altan(const AltanPair& pair, int k);

bool is_connected(const Graph& g);
// Two-colourability; if a colouring is requested it is filled per component.
bool is_bipartite(const Graph& g, std::vector<int>* colour = nullptr);

// JSON document {"n":..., "edges":[[u,v],...], "attachment":[...], "level":k};
// attachment and level are optional on input.
struct GraphDocument {
    Graph graph;
    std::optional<AttachmentSet> attachment;
    int level = 0;
};

std::string to_json(const GraphDocument& doc);
GraphDocument graph_from_json(const std::string& text);

std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

} // namespace altan
