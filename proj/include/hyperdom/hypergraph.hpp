#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperdom/error.hpp"
#include "hyperdom/vertex_set.hpp"

namespace hyperdom {

using Edge = VertexSet;

/// Immutable finite hypergraph on vertices 1..n.
///
/// Invariants enforced by construction: every edge has at least two members,
/// all members are in 1..n, no edge appears twice, and the edge list is kept
/// in shortlex order so that structurally equal hypergraphs compare equal.
/// Isolated vertices are allowed.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Throws Error{EdgeTooSmall | DuplicateEdge | BadVertexId}; n must be in
    /// [0, kMaxVertices] (TooLarge otherwise).
    Hypergraph(int n, std::vector<Edge> edges);

    static Hypergraph from_lists(int n, const std::vector<std::vector<VertexId>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool valid_vertex(VertexId v) const { return v >= 1 && v <= n_; }
    /// Index of `e` in the canonical edge list, if present.
    std::optional<int> find_edge(Edge e) const;
    bool has_edge(Edge e) const { return find_edge(e).has_value(); }

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct DegreeProfile {
    std::vector<int> degree;  // degree[v - 1]
    int min = 0;
    int max = 0;
};

/// Old id -> new id (0 when the vertex was removed); index 0 is unused.
using Relabeling = std::vector<VertexId>;

struct EditResult {
    Hypergraph graph;
    Relabeling relabel;
};

int degree(const Hypergraph& h, VertexId v);
DegreeProfile degree_profile(const Hypergraph& h);
VertexSet neighborhood(const Hypergraph& h, VertexId v);
/// N[v] = N(v) + v
VertexSet closed_neighborhood(const Hypergraph& h, VertexId v);
VertexSet isolated_vertices(const Hypergraph& h);

/// Throws EmptyHypergraph on a hypergraph without edges.
int rank(const Hypergraph& h);
bool is_uniform(const Hypergraph& h, int k);

/// First pair of distinct edges sharing two or more vertices, if any.
std::optional<std::pair<Edge, Edge>> overlapping_pair(const Hypergraph& h);
bool is_linear(const Hypergraph& h);
bool is_intersecting(const Hypergraph& h);

/// H - X: drops the vertices of X and every edge meeting X; survivors are
/// relabeled to 1..n-|X| in their original relative order.
EditResult delete_vertices(const Hypergraph& h, VertexSet x);

/// H - E': drops the listed edges and any vertex left isolated by that.
/// Throws UnknownEdge if some edge is not in H.
EditResult delete_edges(const Hypergraph& h, std::span<const Edge> removed);

/// Replaces `e` by e - {v}. A vertex made isolated is removed. Refuses to
/// produce an edge below size 2 or a duplicate edge.
EditResult shrink_edge(const Hypergraph& h, Edge e, VertexId v);

/// Keeps the vertices in `keep` and relabels them to 1..|keep| in order.
/// Edges must lie inside `keep`.
EditResult compress(int n, std::span<const Edge> edges, VertexSet keep);

/// Applies an old->new relabeling to a set.
VertexSet relabel(VertexSet s, const Relabeling& map);

}  // namespace hyperdom
