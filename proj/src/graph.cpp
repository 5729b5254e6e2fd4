#include "forestpoly/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace forestpoly {

namespace {

std::string pair_text(int u, int v) {
    return "[" + std::to_string(u) + "," + std::to_string(v) + "]";
}

} // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("graph: vertex count must be positive, got " + std::to_string(n));
    }
    if (n > 62) {
        throw std::invalid_argument("graph: vertex count " + std::to_string(n) + " exceeds supported limit 62");
    }
    adj_.assign(static_cast<std::size_t>(n) + 1, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("graph: self-loop " + pair_text(u, v));
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("graph: endpoint out of range in " + pair_text(u, v) +
                                        " for n=" + std::to_string(n));
        }
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v) {
        if (has_edge(u, v)) out.push_back(v);
    }
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int offset = g1.vertex_count();
    std::vector<Edge> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
    return Graph(offset + g2.vertex_count(), edges);
}

Graph parse_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph: expected an object with \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer()) {
        throw std::invalid_argument("graph: \"n\" must be an integer");
    }
    const int n = j["n"].get<int>();
    if (!j["edges"].is_array()) {
        throw std::invalid_argument("graph: \"edges\" must be an array of pairs");
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("graph: edge entries must be integer pairs");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

bool ExtendedGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    const int n = base_->vertex_count();
    if (u < 0 || u > n || v < 0 || v > n) return false;
    if (u == 0 || v == 0) return true; // 0-edges always exist
    return base_->has_edge(u, v);
}

} // namespace forestpoly
