#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace forestpoly {

// Undirected edge in canonical (min,max) order, endpoints 1-based.
using Edge = std::pair<int, int>;

// Simple undirected labeled graph on vertices 1..n. Vertex 0 is reserved
// for the root of the extended graph and never appears in an edge.
// Immutable after construction.
class Graph {
public:
    // Validates and normalizes: pairs are sorted to (min,max), deduplicated.
    // Throws std::invalid_argument on n < 1, self-loops, or out-of-range
    // endpoints, naming the offending pair.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // u, v in 1..n; order irrelevant.
    bool has_edge(int u, int v) const;

    // Neighbors of u in ascending order.
    std::vector<int> neighbors(int u) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;        // sorted lexicographically
    std::vector<std::uint64_t> adj_; // adjacency bitmask per vertex, bit v of adj_[u]
};

Graph make_graph(int n, const std::vector<Edge>& edges);
Graph complete_graph(int n);
Graph empty_graph(int n);

// Edge {u,v} present iff absent from g. Involution.
Graph complement(const Graph& g);

// Vertices of g2 are relabeled by offset g1.n; edges of both are kept.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// JSON format: {"n": <int>, "edges": [[u,v], ...]}, 1-based endpoints,
// serializer emits edges sorted lexicographically.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// View of G~: vertex set {0,1,..,n} with every edge {0,v} implicitly
// present. Never materialized; does not own the base graph.
class ExtendedGraph {
public:
    explicit ExtendedGraph(const Graph& base) : base_(&base) {}

    const Graph& base() const { return *base_; }
    int vertex_count() const { return base_->vertex_count() + 1; }

    // u, v in 0..n.
    bool has_edge(int u, int v) const;

private:
    const Graph* base_;
};

} // namespace forestpoly
