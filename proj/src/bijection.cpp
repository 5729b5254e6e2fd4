#include "forestpoly/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace forestpoly {

bool OperationalSet::contains(const DirectedEdge& e) const {
    return std::binary_search(pairs.begin(), pairs.end(), e);
}

OperationalSet make_operational_set(std::vector<DirectedEdge> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return OperationalSet{std::move(pairs)};
}

std::vector<DirectedEdge> forced_set(const Graph& g, const RootedTree& t) {
    std::vector<DirectedEdge> out;
    for (auto [u, v] : forest_edges(t)) {
        if (g.has_edge(u, v)) out.emplace_back(u, v);
    }
    return out;
}

std::vector<OperationalSet> operational_sets(const Graph& g, const RootedTree& t) {
    const std::vector<DirectedEdge> forced = forced_set(g, t);
    std::vector<DirectedEdge> optional;
    for (auto [u, v] : forest_edges(t)) {
        if (!g.has_edge(u, v)) optional.emplace_back(u, v);
    }
    std::vector<OperationalSet> out;
    const std::size_t subsets = std::size_t{1} << optional.size();
    out.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<DirectedEdge> pairs = forced;
        for (std::size_t i = 0; i < optional.size(); ++i) {
            if ((mask >> i) & 1) pairs.push_back(optional[i]);
        }
        out.push_back(make_operational_set(std::move(pairs)));
    }
    return out;
}

void validate_pair_a(const Graph& g, const PairA& pair) {
    validate_tree(pair.tree);
    if (pair.tree.n != g.vertex_count()) {
        throw std::invalid_argument("pair A: tree vertex count does not match graph");
    }
    for (std::size_t i = 0; i + 1 < pair.ops.pairs.size(); ++i) {
        if (!(pair.ops.pairs[i] < pair.ops.pairs[i + 1])) {
            throw std::invalid_argument("pair A: operational set is not sorted and unique");
        }
    }
    for (auto [u, v] : pair.ops.pairs) {
        if (v == 0) throw std::invalid_argument("pair A: operational pair targets the root");
        if (u < 1 || u > pair.tree.n || pair.tree.parent_of(u) != v) {
            throw std::invalid_argument("pair A: (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not a forest edge of the tree");
        }
    }
    for (auto e : forced_set(g, pair.tree)) {
        if (!pair.ops.contains(e)) {
            throw std::invalid_argument("pair A: operational set misses forced pair (" +
                                        std::to_string(e.first) + "," + std::to_string(e.second) + ")");
        }
    }
}

void validate_pair_b(const Graph& g, const PairB& pair) {
    validate_tree(pair.tree);
    if (pair.tree.n != g.vertex_count()) {
        throw std::invalid_argument("pair B: tree vertex count does not match graph");
    }
    for (auto [u, v] : forest_edges(pair.tree)) {
        if (g.has_edge(u, v)) {
            throw std::invalid_argument("pair B: forest edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") does not lie in the complement");
        }
    }
    const int k = component_count(pair.tree);
    if (static_cast<int>(pair.weights.entries.size()) != k - 1) {
        throw std::invalid_argument("pair B: weight sequence length " + std::to_string(pair.weights.entries.size()) +
                                    " does not match k-1=" + std::to_string(k - 1));
    }
    for (int w : pair.weights.entries) {
        if (w < 0 || w > pair.tree.n) throw std::invalid_argument("pair B: weight entry out of range");
    }
}

PairB phi(const Graph& g, const PairA& pair) {
    validate_pair_a(g, pair);
    const RootedTree& t = pair.tree;
    const int n = t.n;

    // S: vertices whose edge is operational, plus the roots.
    std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
    int s_count = 0;
    for (int u = 1; u <= n; ++u) {
        const int p = t.parent_of(u);
        if (p == 0 || pair.ops.contains({u, p})) {
            in_s[static_cast<std::size_t>(u)] = 1;
            ++s_count;
        }
    }

    // Working copy is pruned destructively; out_parent only ever gets
    // edges rerouted to 0.
    std::vector<char> present(static_cast<std::size_t>(n) + 1, 1);
    std::vector<int> child_count(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) ++child_count[static_cast<std::size_t>(t.parent_of(u))];
    std::vector<int> out_parent = t.parent;
    std::vector<int> weights;

    auto is_leaf = [&](int u) {
        return u >= 1 && present[static_cast<std::size_t>(u)] && child_count[static_cast<std::size_t>(u)] == 0;
    };
    auto remove_leaf = [&](int u) {
        present[static_cast<std::size_t>(u)] = 0;
        --child_count[static_cast<std::size_t>(t.parent_of(u))];
    };

    while (s_count > 1) {
        // Prune leaves outside S until every leaf lies in S.
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (int u = 1; u <= n; ++u) {
                if (is_leaf(u) && !in_s[static_cast<std::size_t>(u)]) {
                    remove_leaf(u);
                    pruned = true;
                }
            }
        }
        // Largest remaining leaf; by the pruning above it lies in S.
        int best = 0;
        for (int u = 1; u <= n; ++u) {
            if (is_leaf(u)) best = u;
        }
        if (best == 0) throw std::logic_error("phi: no leaf available"); // unreachable on valid input
        const int former_parent = t.parent_of(best);
        remove_leaf(best);
        in_s[static_cast<std::size_t>(best)] = 0;
        --s_count;
        weights.push_back(former_parent);
        out_parent[static_cast<std::size_t>(best) - 1] = 0;
    }

    PairB out{RootedTree{n, std::move(out_parent)}, WeightSequence{std::move(weights)}};
    validate_pair_b(g, out);
    return out;
}

PairA psi(const Graph& g, const PairB& pair) {
    validate_pair_b(g, pair);
    const int n = pair.tree.n;

    RootedTree cur = pair.tree;
    std::vector<int> sequence = pair.weights.entries;
    std::size_t front = 0; // consumed prefix of the sequence
    std::vector<char> in_r(static_cast<std::size_t>(n) + 1, 0);
    for (int r : roots(cur)) in_r[static_cast<std::size_t>(r)] = 1;
    std::vector<DirectedEdge> ops;

    while (front < sequence.size()) {
        const int w = sequence[front];
        // Largest root u such that no remaining sequence entry (including w
        // itself) is u or a child of u in the current tree.
        int chosen = 0;
        for (int u = n; u >= 1; --u) {
            if (!in_r[static_cast<std::size_t>(u)]) continue;
            bool blocked = false;
            for (std::size_t i = front; i < sequence.size() && !blocked; ++i) {
                blocked = is_child_or_self(cur, sequence[i], u);
            }
            if (!blocked) {
                chosen = u;
                break;
            }
        }
        if (chosen == 0) {
            throw std::logic_error("psi: no admissible root remains; input violates the pair B contract");
        }
        ++front;
        in_r[static_cast<std::size_t>(chosen)] = 0;
        cur.parent[static_cast<std::size_t>(chosen) - 1] = w; // replaces (u,0); no-op when w == 0
        if (w != 0) ops.emplace_back(chosen, w);
    }

    PairA out{std::move(cur), make_operational_set(std::move(ops))};
    validate_pair_a(g, out);
    return out;
}

std::vector<PairA> enumerate_pairs_a(const Graph& g) {
    std::vector<PairA> out;
    for_each_rooted_tree(complete_graph(g.vertex_count()), [&](const RootedTree& t) {
        for (auto& ops : operational_sets(g, t)) out.push_back(PairA{t, std::move(ops)});
    });
    return out;
}

std::vector<PairB> enumerate_pairs_b(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<PairB> out;
    for_each_rooted_tree(complement(g), [&](const RootedTree& t) {
        const int k = component_count(t);
        std::vector<int> w(static_cast<std::size_t>(k) - 1, 0);
        // Odometer over {0..n}^(k-1), first entry most significant.
        while (true) {
            out.push_back(PairB{t, WeightSequence{w}});
            int pos = k - 2;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    });
    return out;
}

WeightSequence prufer_encode(const RootedTree& t) {
    validate_tree(t);
    const Graph kn = complete_graph(t.n);
    PairA pair{t, make_operational_set(forest_edges(t))};
    return phi(kn, pair).weights;
}

RootedTree prufer_decode(const WeightSequence& w, int n) {
    if (static_cast<int>(w.entries.size()) != n - 1) {
        throw std::invalid_argument("prufer decode: expected sequence of length n-1=" + std::to_string(n - 1) +
                                    ", got " + std::to_string(w.entries.size()));
    }
    const Graph kn = complete_graph(n);
    RootedTree star{n, std::vector<int>(static_cast<std::size_t>(n), 0)};
    return psi(kn, PairB{std::move(star), w}).tree;
}

namespace {

nlohmann::json parse_object(const std::string& text, const char* what) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON: " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    return j;
}

} // namespace

std::pair<Graph, PairA> parse_pair_a(const std::string& text) {
    nlohmann::json j = parse_object(text, "pair A");
    if (!j.contains("graph") || !j.contains("tree") || !j.contains("ops")) {
        throw std::invalid_argument("pair A: expected keys \"graph\", \"tree\", \"ops\"");
    }
    Graph g = parse_graph(j["graph"].dump());
    RootedTree t = parse_tree(j["tree"].dump());
    if (!j["ops"].is_array()) throw std::invalid_argument("pair A: \"ops\" must be an array of pairs");
    std::vector<DirectedEdge> ops;
    for (const auto& e : j["ops"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::invalid_argument("pair A: ops entries must be integer pairs");
        }
        ops.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    PairA pair{std::move(t), make_operational_set(std::move(ops))};
    validate_pair_a(g, pair);
    return {std::move(g), std::move(pair)};
}

std::pair<Graph, PairB> parse_pair_b(const std::string& text) {
    nlohmann::json j = parse_object(text, "pair B");
    if (!j.contains("graph") || !j.contains("tree") || !j.contains("weights")) {
        throw std::invalid_argument("pair B: expected keys \"graph\", \"tree\", \"weights\"");
    }
    Graph g = parse_graph(j["graph"].dump());
    RootedTree t = parse_tree(j["tree"].dump());
    if (!j["weights"].is_array()) throw std::invalid_argument("pair B: \"weights\" must be an array");
    std::vector<int> weights;
    for (const auto& w : j["weights"]) {
        if (!w.is_number_integer()) throw std::invalid_argument("pair B: weight entries must be integers");
        weights.push_back(w.get<int>());
    }
    PairB pair{std::move(t), WeightSequence{std::move(weights)}};
    validate_pair_b(g, pair);
    return {std::move(g), std::move(pair)};
}

std::string serialize_pair_a(const Graph& g, const PairA& pair) {
    nlohmann::ordered_json j;
    j["graph"] = nlohmann::ordered_json::parse(serialize_graph(g));
    j["tree"] = nlohmann::ordered_json::parse(serialize_tree(pair.tree));
    j["ops"] = nlohmann::ordered_json::array();
    for (auto [u, v] : pair.ops.pairs) j["ops"].push_back({u, v});
    return j.dump();
}

std::string serialize_pair_b(const Graph& g, const PairB& pair) {
    nlohmann::ordered_json j;
    j["graph"] = nlohmann::ordered_json::parse(serialize_graph(g));
    j["tree"] = nlohmann::ordered_json::parse(serialize_tree(pair.tree));
    j["weights"] = pair.weights.entries;
    return j.dump();
}

} // namespace forestpoly
