#include "forestpoly/reciprocity.hpp"

#include <algorithm>
#include <stdexcept>

namespace forestpoly {

Polynomial reciprocity_rhs(const Graph& g) {
    const int n = g.vertex_count();
    const Polynomial f_bar = f_poly(complement(g));
    const std::vector<std::int64_t> minus_all(static_cast<std::size_t>(n) + 1, -1);
    const Polynomial substituted = substitute_root(f_bar, minus_all);
    return (n - 1) % 2 == 0 ? substituted : scale(substituted, -1);
}

bool verify_reciprocity(const Graph& g) { return f_poly(g) == reciprocity_rhs(g); }

bool negation_identity(const Graph& g) {
    const int n = g.vertex_count();
    const Polynomial f = f_poly(g);
    std::vector<int> all_vars(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) all_vars[static_cast<std::size_t>(i)] = i;
    const Polynomial lhs = (n - 1) % 2 == 0 ? f : scale(f, -1);
    return lhs == negate_vars(f, all_vars);
}

SignedMonomial b_side_monomial(const Graph& g, const PairB& pair) {
    validate_pair_b(g, pair);
    const RootedTree& t = pair.tree;
    const int n = t.n;
    Monomial m(n);
    for (int w : pair.weights.entries) m.set_exponent(w, m.exponent(w) + 1);
    for (int i = 1; i <= n; ++i) m.set_exponent(i, m.exponent(i) + tree_degree(t, i) - 1);
    const int l = n - tree_degree(t, 0);
    return SignedMonomial{std::move(m), l % 2 == 0 ? 1 : -1};
}

bool check_sign_relation(const Graph& g, const PairA& pair) {
    validate_pair_a(g, pair);
    const PairB image = phi(g, pair);
    const SignedMonomial b = b_side_monomial(g, image);
    // Two routes to the sign exponent must agree.
    int l_sum = 0;
    for (int i = 1; i <= image.tree.n; ++i) l_sum += tree_degree(image.tree, i) - 1;
    const int l_root = image.tree.n - tree_degree(image.tree, 0);
    if (l_sum != l_root) return false;
    if (b.sign != (l_root % 2 == 0 ? 1 : -1)) return false;
    // The unsigned B-side monomial reproduces the A-side tree monomial.
    return b.monomial == tree_monomial(pair.tree);
}

std::vector<std::pair<OperationalSet, OperationalSet>>
cancellation_pairs(const Graph& g, const RootedTree& t) {
    validate_tree(t);
    if (t.n != g.vertex_count()) throw std::invalid_argument("cancellation: tree vertex count does not match graph");

    std::vector<DirectedEdge> in_complement;
    for (auto [u, v] : forest_edges(t)) {
        if (!g.has_edge(u, v)) in_complement.emplace_back(u, v);
    }
    if (in_complement.empty()) {
        throw std::invalid_argument("cancellation: tree is a spanning tree of the extended graph; "
                                    "no forest edge lies in the complement");
    }
    const DirectedEdge toggle = *std::min_element(in_complement.begin(), in_complement.end());

    std::vector<std::pair<OperationalSet, OperationalSet>> out;
    for (const OperationalSet& ops : operational_sets(g, t)) {
        if (ops.contains(toggle)) continue; // each pair is keyed by its toggle-free member
        std::vector<DirectedEdge> with = ops.pairs;
        with.push_back(toggle);
        OperationalSet o1 = make_operational_set(std::move(with));

        const PairB b1 = phi(g, PairA{t, o1});
        const PairB b2 = phi(g, PairA{t, ops});
        const SignedMonomial m1 = b_side_monomial(g, b1);
        const SignedMonomial m2 = b_side_monomial(g, b2);
        if (!(m1.monomial == m2.monomial) || m1.sign + m2.sign != 0 ||
            std::abs(tree_degree(b1.tree, 0) - tree_degree(b2.tree, 0)) != 1) {
            throw std::logic_error("cancellation: paired operational sets failed to cancel");
        }
        out.emplace_back(std::move(o1), ops);
    }
    return out;
}

} // namespace forestpoly
