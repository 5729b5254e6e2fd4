#include "forestpoly/forest.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace forestpoly {

namespace {

// Union-find with undo, no path compression; one unite per search level.
class RollbackUnionFind {
public:
    explicit RollbackUnionFind(int count) : parent_(count), size_(count, 1) {
        for (int i = 0; i < count; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[static_cast<std::size_t>(ra)] > size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<std::size_t>(ra)] = rb;
        size_[static_cast<std::size_t>(rb)] += size_[static_cast<std::size_t>(ra)];
        log_.emplace_back(ra, rb);
        return true;
    }

    void undo_last() {
        auto [child, root] = log_.back();
        log_.pop_back();
        parent_[static_cast<std::size_t>(child)] = child;
        size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(child)];
    }

private:
    std::vector<int> parent_, size_;
    std::vector<std::pair<int, int>> log_;
};

// Enumerates parent assignments parent(u) in candidates[u] for u = first..n,
// acyclic over vertex ids 0..n, in lexicographic order of the parent vector.
void enumerate_arborescences(int n, int first, const std::vector<std::vector<int>>& candidates,
                             std::vector<int>& parent, RollbackUnionFind& uf,
                             const std::function<void(const std::vector<int>&)>& visit) {
    if (first > n) {
        visit(parent);
        return;
    }
    for (int v : candidates[static_cast<std::size_t>(first)]) {
        if (!uf.unite(first, v)) continue; // would close a cycle
        parent[static_cast<std::size_t>(first - 1)] = v;
        enumerate_arborescences(n, first + 1, candidates, parent, uf, visit);
        uf.undo_last();
    }
}

} // namespace

RootedTree make_rooted_tree(int n, std::vector<int> parent) {
    RootedTree t{n, std::move(parent)};
    validate_tree(t);
    return t;
}

void validate_tree(const RootedTree& t) {
    if (t.n < 1) throw std::invalid_argument("tree: vertex count must be positive");
    if (static_cast<int>(t.parent.size()) != t.n) {
        throw std::invalid_argument("tree: parent vector length " + std::to_string(t.parent.size()) +
                                    " does not match n=" + std::to_string(t.n));
    }
    for (int u = 1; u <= t.n; ++u) {
        const int p = t.parent_of(u);
        if (p < 0 || p > t.n) throw std::invalid_argument("tree: parent of " + std::to_string(u) + " out of range");
        if (p == u) throw std::invalid_argument("tree: vertex " + std::to_string(u) + " is its own parent");
    }
    for (int u = 1; u <= t.n; ++u) {
        int cur = u, steps = 0;
        while (cur != 0) {
            cur = t.parent_of(cur);
            if (++steps > t.n) {
                throw std::invalid_argument("tree: parent walk from " + std::to_string(u) + " never reaches 0");
            }
        }
    }
}

std::vector<DirectedEdge> forest_edges(const RootedTree& t) {
    std::vector<DirectedEdge> out;
    for (int u = 1; u <= t.n; ++u) {
        if (t.parent_of(u) != 0) out.emplace_back(u, t.parent_of(u));
    }
    return out;
}

std::vector<int> roots(const RootedTree& t) {
    std::vector<int> out;
    for (int u = 1; u <= t.n; ++u) {
        if (t.parent_of(u) == 0) out.push_back(u);
    }
    return out;
}

int component_count(const RootedTree& t) { return static_cast<int>(roots(t).size()); }

bool is_child_or_self(const RootedTree& t, int v, int u) {
    if (v == 0) return false;
    int cur = v;
    while (cur != 0) {
        if (cur == u) return true;
        cur = t.parent_of(cur);
    }
    return false;
}

int tree_degree(const RootedTree& t, int v) {
    int deg = v == 0 ? 0 : 1;
    for (int u = 1; u <= t.n; ++u) {
        if (t.parent_of(u) == v) ++deg;
    }
    return deg;
}

void for_each_rooted_tree(const Graph& g, const std::function<void(const RootedTree&)>& visit) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u) {
        candidates[static_cast<std::size_t>(u)].push_back(0); // 0-edge always available
        for (int v : g.neighbors(u)) candidates[static_cast<std::size_t>(u)].push_back(v);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    RollbackUnionFind uf(n + 1);
    RootedTree t{n, {}};
    enumerate_arborescences(n, 1, candidates, parent, uf, [&](const std::vector<int>& p) {
        t.parent = p;
        visit(t);
    });
}

std::vector<RootedTree> enumerate_rooted_trees(const Graph& g) {
    std::vector<RootedTree> out;
    for_each_rooted_tree(g, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

Monomial tree_monomial(const RootedTree& t) {
    Monomial m(t.n);
    for (int v = 0; v <= t.n; ++v) m.set_exponent(v, tree_degree(t, v) - 1);
    return m;
}

Polynomial f_poly(const Graph& g) {
    Polynomial f(g.vertex_count());
    for_each_rooted_tree(g, [&](const RootedTree& t) { f.add_term(tree_monomial(t), 1); });
    return f;
}

Polynomial t_poly(const Graph& g) {
    const int n = g.vertex_count();
    Polynomial result(n);
    if (n == 1) {
        // Single vertex: the empty tree, monomial 1.
        result.add_term(Monomial(n), 1);
        return result;
    }
    // Spanning trees of g directed toward vertex 1: assign parents for 2..n
    // among g-neighbors only. Disconnected graphs admit no assignment.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n) + 1);
    for (int u = 2; u <= n; ++u) candidates[static_cast<std::size_t>(u)] = g.neighbors(u);
    std::vector<int> parent(static_cast<std::size_t>(n), 0); // parent[0] unused (vertex 1 is the root)
    RollbackUnionFind uf(n + 1);
    enumerate_arborescences(n, 2, candidates, parent, uf, [&](const std::vector<int>& p) {
        std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
        for (int u = 2; u <= n; ++u) {
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(p[static_cast<std::size_t>(u - 1)])];
        }
        Monomial m(n);
        for (int v = 1; v <= n; ++v) m.set_exponent(v, degree[static_cast<std::size_t>(v)] - 1);
        result.add_term(m, 1);
    });
    return result;
}

bool verify_root_identity(const Graph& g) {
    const int n = g.vertex_count();
    Polynomial vars_sum(n);
    for (int i = 1; i <= n; ++i) {
        Monomial m(n);
        m.set_exponent(i, 1);
        vars_sum.add_term(m, 1);
    }
    const Polynomial lhs = mul(t_poly(g), vars_sum);
    const Polynomial rhs = substitute_root(f_poly(g), std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    return lhs == rhs;
}

bool verify_composition(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    const int n = n1 + n2;
    const Polynomial lhs = f_poly(disjoint_union(g1, g2));
    const Polynomial rhs =
        mul(Polynomial::variable(n, 0), mul(embed(f_poly(g1), n, 0), embed(f_poly(g2), n, n1)));
    return lhs == rhs;
}

RootedTree parse_tree(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("tree: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("parent") || !j["n"].is_number_integer() ||
        !j["parent"].is_array()) {
        throw std::invalid_argument("tree: expected an object with integer \"n\" and array \"parent\"");
    }
    std::vector<int> parent;
    for (const auto& p : j["parent"]) {
        if (!p.is_number_integer()) throw std::invalid_argument("tree: parent entries must be integers");
        parent.push_back(p.get<int>());
    }
    return make_rooted_tree(j["n"].get<int>(), std::move(parent));
}

std::string serialize_tree(const RootedTree& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["parent"] = t.parent;
    return j.dump();
}

} // namespace forestpoly
