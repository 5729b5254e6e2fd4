#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forestpoly/forest.hpp"
#include "forestpoly/graph.hpp"

namespace forestpoly {

// Set of directed forest edges (u,v), v != 0, of a reference tree; always
// contains the forced set Z of that (graph, tree) pair. Kept sorted.
struct OperationalSet {
    std::vector<DirectedEdge> pairs;

    bool contains(const DirectedEdge& e) const;
    bool operator==(const OperationalSet& other) const { return pairs == other.pairs; }
};

OperationalSet make_operational_set(std::vector<DirectedEdge> pairs);

// Sequence (w1,..,w_{k-1}) of vertex labels in {0,..,n}; empty when k = 1.
struct WeightSequence {
    std::vector<int> entries;

    bool operator==(const WeightSequence& other) const { return entries == other.entries; }
};

// Element of A: rooted tree over the ambient complete graph together with
// an operational set valid for (g, tree).
struct PairA {
    RootedTree tree;
    OperationalSet ops;

    bool operator==(const PairA& other) const {
        return tree == other.tree && ops == other.ops;
    }
};

// Element of B: rooted tree all of whose forest edges lie in complement(g),
// with a weight sequence of length k-1.
struct PairB {
    RootedTree tree;
    WeightSequence weights;

    bool operator==(const PairB& other) const {
        return tree == other.tree && weights == other.weights;
    }
};

// Z(g,t): the forest edges (u,v), v != 0, of t that are edges of g
// (equivalently, not edges of complement(g)).
std::vector<DirectedEdge> forced_set(const Graph& g, const RootedTree& t);

// All Z union C for subsets C of the remaining forest edges, in subset-mask
// order over the complement-edges sorted ascending. Count is
// 2^(#forest edges of t lying in complement(g)).
std::vector<OperationalSet> operational_sets(const Graph& g, const RootedTree& t);

// Throw std::invalid_argument when the pair violates its invariants
// against g.
void validate_pair_a(const Graph& g, const PairA& pair);
void validate_pair_b(const Graph& g, const PairB& pair);

// The map phi: A -> B. Repeatedly prunes leaves outside S, deletes the
// largest remaining leaf u* of S, records its parent in the weight
// sequence, and reroots u* to 0 in the output tree, until |S| = 1.
PairB phi(const Graph& g, const PairA& pair);

// The map psi: B -> A, inverse of phi. Consumes the weight sequence front
// to back; each step reroots the largest admissible root u onto the
// current front entry w (admissible: no current sequence entry equals u or
// is a child of u in the evolving tree) and, when w != 0, adds (u,w) to
// the operational set. Exhaustion of candidates signals an implementation
// bug and throws std::logic_error.
PairA psi(const Graph& g, const PairB& pair);

// Exhaustive, deterministic enumerations of A and B for g.
std::vector<PairA> enumerate_pairs_a(const Graph& g);
std::vector<PairB> enumerate_pairs_b(const Graph& g);

// Prufer coding as the complete-graph special case: encode is phi with
// g = K_n (unique operational set = all forest edges); decode is psi with
// g = K_n (input tree = the all-roots star). Mutually inverse.
WeightSequence prufer_encode(const RootedTree& t);
RootedTree prufer_decode(const WeightSequence& w, int n);

// JSON file formats:
//   PairA: {"graph": <graph>, "tree": <tree>, "ops": [[u,v], ...]}
//   PairB: {"graph": <graph>, "tree": <tree>, "weights": [w1, ...]}
std::pair<Graph, PairA> parse_pair_a(const std::string& text);
std::pair<Graph, PairB> parse_pair_b(const std::string& text);
std::string serialize_pair_a(const Graph& g, const PairA& pair);
std::string serialize_pair_b(const Graph& g, const PairB& pair);

} // namespace forestpoly
