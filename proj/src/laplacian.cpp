#include "forestpoly/laplacian.hpp"

#include <stdexcept>

#include "forestpoly/forest.hpp"
#include "forestpoly/polynomial.hpp"

namespace forestpoly {

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix m(n);
    for (auto [u, v] : g.edges()) {
        m.at(u - 1, v - 1) = -1;
        m.at(v - 1, u - 1) = -1;
        m.at(u - 1, u - 1) += 1;
        m.at(v - 1, v - 1) += 1;
    }
    return m;
}

// Bareiss fraction-free elimination; every division is exact.
std::int64_t det(IntMatrix m) {
    const int dim = m.dim();
    std::int64_t prev_pivot = 1;
    int sign = 1;
    for (int k = 0; k + 1 < dim; ++k) {
        if (m.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < dim; ++i) {
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return 0;
            for (int j = 0; j < dim; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                const std::int64_t num =
                    checked_add(checked_mul(m.at(i, j), m.at(k, k)), checked_neg(checked_mul(m.at(i, k), m.at(k, j))));
                if (num % prev_pivot != 0) throw std::logic_error("bareiss: inexact division");
                m.at(i, j) = num / prev_pivot;
            }
            m.at(i, k) = 0;
        }
        prev_pivot = m.at(k, k);
    }
    const std::int64_t d = dim == 0 ? 1 : m.at(dim - 1, dim - 1);
    return sign == 1 ? d : checked_neg(d);
}

std::int64_t spanning_tree_count(const Graph& g) {
    const int n = g.vertex_count();
    const IntMatrix full = laplacian(g);
    IntMatrix reduced(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) reduced.at(i, j) = full.at(i, j);
    return det(std::move(reduced));
}

Graph extended_as_concrete(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (int v = 1; v <= n; ++v) edges.emplace_back(v, n + 1); // root 0 relabeled to n+1
    return Graph(n + 1, edges);
}

bool forest_charpoly_check(const Graph& g) {
    const int n = g.vertex_count();
    const Polynomial f = f_poly(g);
    const IntMatrix lap = laplacian(g);
    for (std::int64_t j = 1; j <= n + 1; ++j) {
        std::vector<std::int64_t> point(static_cast<std::size_t>(n) + 1, 1);
        point[0] = j;
        const std::int64_t lhs = checked_mul(evaluate(f, point), j);
        IntMatrix shifted = lap;
        for (int i = 0; i < n; ++i) shifted.at(i, i) = checked_add(shifted.at(i, i), j);
        if (lhs != det(std::move(shifted))) return false;
    }
    return true;
}

} // namespace forestpoly
