#pragma once

#include <utility>
#include <vector>

#include "forestpoly/bijection.hpp"
#include "forestpoly/forest.hpp"
#include "forestpoly/graph.hpp"
#include "forestpoly/polynomial.hpp"

namespace forestpoly {

struct SignedMonomial {
    Monomial monomial;
    int sign; // +1 or -1

    bool operator==(const SignedMonomial& other) const {
        return sign == other.sign && monomial == other.monomial;
    }
};

// (-1)^(n-1) * f_{complement(g)} with x replaced by -x - x1 - ... - xn.
Polynomial reciprocity_rhs(const Graph& g);

// The reciprocity identity: f_g == reciprocity_rhs(g), term by term.
bool verify_reciprocity(const Graph& g);

// Homogeneity corollary: (-1)^(n-1) * f_g == f_g with all variables
// negated.
bool negation_identity(const Graph& g);

// The monomial a B-pair contributes to the expansion of
// f_complement(x+x1+..+xn; -x1,..,-xn): unsigned part
// x_{w1}..x_{w_{k-1}} * x1^(deg(v1)-1) .. xn^(deg(vn)-1) with degrees
// measured in the pair's tree (x_0 = x), and sign (-1)^l with
// l = n - deg(v0).
SignedMonomial b_side_monomial(const Graph& g, const PairB& pair);

// The bookkeeping identity behind the bijective proof: for pairB = phi(pairA),
// the unsigned B-side monomial equals tree_monomial(pairA.tree) exactly, and
// the sign exponent computed the two ways agrees:
// sum_{i>=1}(deg(v_i)-1) == n - deg(v_0).
bool check_sign_relation(const Graph& g, const PairA& pair);

// For a tree t of the ambient complete graph that is NOT a spanning tree
// of G~ (some forest edge lies in complement(g)): partitions all
// operational sets of (g,t) into pairs differing exactly in the canonical
// toggle edge (the lexicographically smallest forest edge of t lying in
// complement(g)); first member contains the toggle. Verifies that the two
// phi-images of each pair carry identical unsigned monomials with opposite
// signs (root degrees differ by exactly 1), i.e. net contribution zero;
// violation throws std::logic_error. Precondition violation throws
// std::invalid_argument.
std::vector<std::pair<OperationalSet, OperationalSet>>
cancellation_pairs(const Graph& g, const RootedTree& t);

} // namespace forestpoly
