#pragma once

#include <cstdint>
#include <vector>

#include "forestpoly/graph.hpp"

namespace forestpoly {

// Dense square matrix of exact 64-bit integers (checked arithmetic).
class IntMatrix {
public:
    explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {}

    int dim() const { return dim_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    static IntMatrix identity(int dim);

private:
    int dim_;
    std::vector<std::int64_t> a_;
};

// L[u][u] = deg(u), L[u][v] = -1 iff {u,v} is an edge; rows/cols follow
// vertices 1..n.
IntMatrix laplacian(const Graph& g);

// Exact determinant by Bareiss fraction-free elimination. Stays in
// integers throughout; overflow throws. The 0x0 determinant is 1.
std::int64_t det(IntMatrix m);

// Kirchhoff: determinant of the Laplacian with the last row and column
// deleted. Zero for disconnected graphs.
std::int64_t spanning_tree_count(const Graph& g);

// G~ as a concrete (n+1)-vertex graph with root 0 relabeled to n+1, so the
// ordinary Graph invariants apply.
Graph extended_as_concrete(const Graph& g);

// Rooted-forest characteristic-polynomial identity used as an independent
// oracle: for every j in 1..n+1,
//   evaluate(f_poly(g), [j,1,..,1]) * j == det(laplacian(g) + j*I).
// Both sides count spanning rooted forests weighted j^(#roots); n+1
// evaluation points pin down the degree-<=n polynomial in j.
bool forest_charpoly_check(const Graph& g);

} // namespace forestpoly
