#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "forestpoly/graph.hpp"
#include "forestpoly/polynomial.hpp"

namespace forestpoly {

// Directed forest edge (child, parent); arrows point toward root 0.
using DirectedEdge = std::pair<int, int>;

// Spanning tree of G~ directed toward root 0, stored as a parent
// assignment: parent(u) in {0,..,n} for u in 1..n. Equivalently a spanning
// rooted forest of G (drop the 0-edges; each parent(u)=0 vertex is a root).
struct RootedTree {
    int n = 0;
    std::vector<int> parent; // parent[u-1] = parent of u

    int parent_of(int u) const { return parent[static_cast<std::size_t>(u) - 1]; }

    bool operator==(const RootedTree& other) const {
        return n == other.n && parent == other.parent;
    }
};

// Validates the RootedTree invariants: size, range, parent(u) != u, and
// every parent walk reaches 0. Throws std::invalid_argument.
RootedTree make_rooted_tree(int n, std::vector<int> parent);
void validate_tree(const RootedTree& t);

// ForestView accessors (derived data, paper's F_G).
std::vector<DirectedEdge> forest_edges(const RootedTree& t); // parent != 0, ascending by child
std::vector<int> roots(const RootedTree& t);                 // parent == 0, ascending
int component_count(const RootedTree& t);                    // k = |roots|

// True iff v == u or v is a child of u in the paper's sense, i.e. the
// directed parent walk from v passes through u. v may be 0 (never a child).
bool is_child_or_self(const RootedTree& t, int v, int u);

// Undirected degree of vertex v (0..n) in the extended tree: children
// count, plus one for the parent edge when v != 0.
int tree_degree(const RootedTree& t, int v);

// Yields every spanning tree of G~ exactly once, directed toward 0, in
// lexicographic order of the parent vector. Backtracking over parent
// assignments with union-find cycle pruning; only edges of G plus 0-edges
// are used.
void for_each_rooted_tree(const Graph& g, const std::function<void(const RootedTree&)>& visit);
std::vector<RootedTree> enumerate_rooted_trees(const Graph& g);

// m(T): exponent at v is (degree of v in the extended tree) - 1; the root
// exponent is k-1.
Monomial tree_monomial(const RootedTree& t);

// f_G = sum of m(T) over spanning trees of G~. Homogeneous of degree n-1.
Polynomial f_poly(const Graph& g);

// t_G = sum of degree monomials over spanning trees of G itself (no root
// 0); the zero polynomial when G is disconnected. Ambient n+1 with the
// root variable unused.
Polynomial t_poly(const Graph& g);

// Eq.: t_G(x1..xn) * (x1+..+xn) == f_G(0; x1..xn).
bool verify_root_identity(const Graph& g);

// f_{g1+g2} == x * f_{g1} * f_{g2} after embedding into the union's
// variable space.
bool verify_composition(const Graph& g1, const Graph& g2);

// JSON format: {"n": <int>, "parent": [p1, .., pn]} with p_i in 0..n.
RootedTree parse_tree(const std::string& text);
std::string serialize_tree(const RootedTree& t);

} // namespace forestpoly
