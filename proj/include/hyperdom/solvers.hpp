#pragma once

#include <string_view>
#include <vector>

#include "hyperdom/hypergraph.hpp"

namespace hyperdom {

enum class InvariantKind { Domination, Transversal, Matching, Quasidegree };

std::string_view to_string(InvariantKind kind);

/// An optimal value together with a set that certifies it. Vertex kinds
/// (domination, transversal) fill `vertices`; edge kinds fill `edges`.
/// Among optimal certificates the lexicographically least one is returned
/// (vertex sets as sorted id sequences, edge sets as sorted sequences of
/// canonical edge indices).
struct InvariantWitness {
    InvariantKind kind = InvariantKind::Domination;
    int value = 0;
    VertexSet vertices;
    std::vector<Edge> edges;
    VertexId focus = 0;  // the vertex v for quasidegree, else 0
};

/// gamma(H). Isolated vertices are forced into every dominating set.
/// Throws EmptyHypergraph when H has no vertices.
InvariantWitness domination_number(const Hypergraph& h);

/// tau(H). Throws EmptyHypergraph when H has no edges.
InvariantWitness transversal_number(const Hypergraph& h);

/// alpha'(H). Throws EmptyHypergraph when H has no edges.
InvariantWitness matching_number(const Hypergraph& h);

/// qd(v): the largest family of edges through v whose pairwise intersections
/// are exactly {v}. A single incident edge qualifies on its own, so qd(v) = 1
/// whenever d(v) >= 1, and qd(v) = 0 for an isolated vertex.
InvariantWitness quasidegree(const Hypergraph& h, VertexId v);

inline constexpr int kBruteForceMaxVertices = 20;
inline constexpr int kBruteForceMaxEdges = 12;

/// Exhaustive enumeration of subsets in increasing size, no pruning. Shares
/// no search code with the dedicated solvers. For Quasidegree pass `focus`.
/// Throws TooLarge past 20 vertices or 12 edges.
InvariantWitness brute_force_invariant(const Hypergraph& h, InvariantKind kind, VertexId focus = 0);

/// Definition-level check of a witness: the certificate has the claimed
/// property and |certificate| == value. Does not check optimality.
bool certificate_valid(const Hypergraph& h, const InvariantWitness& w);

}  // namespace hyperdom
