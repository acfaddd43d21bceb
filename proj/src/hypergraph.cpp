#include "hyperdom/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hyperdom {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EdgeTooSmall: return "EdgeTooSmall";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::BadVertexId: return "BadVertexId";
        case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::VertexNotInEdge: return "VertexNotInEdge";
        case ErrorCode::EdgeTooSmallAfterShrink: return "EdgeTooSmallAfterShrink";
        case ErrorCode::DuplicateEdgeAfterShrink: return "DuplicateEdgeAfterShrink";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::MultiplePendants: return "MultiplePendants";
        case ErrorCode::NoPendant: return "NoPendant";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](VertexId v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

bool shortlex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // Equal sizes agree below the lowest differing bit, so whoever owns that
    // bit has the smaller element at the first differing position.
    return (a.bits() & (diff & -diff)) != 0;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(ErrorCode::TooLarge, "vertex count " + std::to_string(n) + " outside [0, 64]");
    }
    const VertexSet all = VertexSet::range(n);
    for (const Edge& e : edges_) {
        if (e.size() < 2) throw Error(ErrorCode::EdgeTooSmall, "edge " + e.to_string() + " has fewer than 2 vertices");
        if (!e.subset_of(all)) {
            throw Error(ErrorCode::BadVertexId, "edge " + e.to_string() + " uses a vertex outside 1.." + std::to_string(n));
        }
    }
    std::sort(edges_.begin(), edges_.end(), shortlex_less);
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw Error(ErrorCode::DuplicateEdge, "edge " + dup->to_string() + " listed twice");
}

Hypergraph Hypergraph::from_lists(int n, const std::vector<std::vector<VertexId>>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const auto& list : edges) {
        Edge e;
        for (VertexId v : list) {
            if (v < 1 || v > n || v > kMaxVertices) {
                throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
            if (e.contains(v)) {
                throw Error(ErrorCode::SemanticError, "vertex " + std::to_string(v) + " repeated within an edge");
            }
            e.insert(v);
        }
        out.push_back(e);
    }
    return Hypergraph(n, std::move(out));
}

std::optional<int> Hypergraph::find_edge(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, shortlex_less);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

namespace {

void require_vertex(const Hypergraph& h, VertexId v) {
    if (!h.valid_vertex(v)) {
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(h.num_vertices()));
    }
}

}  // namespace

int degree(const Hypergraph& h, VertexId v) {
    require_vertex(h, v);
    return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(), [v](Edge e) { return e.contains(v); }));
}

DegreeProfile degree_profile(const Hypergraph& h) {
    DegreeProfile p;
    p.degree.assign(h.num_vertices(), 0);
    for (Edge e : h.edges()) e.for_each([&](VertexId v) { ++p.degree[v - 1]; });
    if (!p.degree.empty()) {
        auto [lo, hi] = std::minmax_element(p.degree.begin(), p.degree.end());
        p.min = *lo;
        p.max = *hi;
    }
    return p;
}

VertexSet neighborhood(const Hypergraph& h, VertexId v) {
    VertexSet n = closed_neighborhood(h, v);
    n.erase(v);
    return n;
}

VertexSet closed_neighborhood(const Hypergraph& h, VertexId v) {
    require_vertex(h, v);
    VertexSet out{v};
    for (Edge e : h.edges()) {
        if (e.contains(v)) out |= e;
    }
    return out;
}

VertexSet isolated_vertices(const Hypergraph& h) {
    VertexSet covered;
    for (Edge e : h.edges()) covered |= e;
    return h.vertices() - covered;
}

int rank(const Hypergraph& h) {
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, "rank of a hypergraph without edges");
    int r = 0;
    for (Edge e : h.edges()) r = std::max(r, e.size());
    return r;
}

bool is_uniform(const Hypergraph& h, int k) {
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, "uniformity of a hypergraph without edges");
    return std::all_of(h.edges().begin(), h.edges().end(), [k](Edge e) { return e.size() == k; });
}

std::optional<std::pair<Edge, Edge>> overlapping_pair(const Hypergraph& h) {
    const auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if ((edges[i] & edges[j]).size() >= 2) return std::pair{edges[i], edges[j]};
        }
    }
    return std::nullopt;
}

bool is_linear(const Hypergraph& h) { return !overlapping_pair(h).has_value(); }

bool is_intersecting(const Hypergraph& h) {
    const auto edges = h.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!edges[i].intersects(edges[j])) return false;
        }
    }
    return true;
}

VertexSet relabel(VertexSet s, const Relabeling& map) {
    VertexSet out;
    s.for_each([&](VertexId v) {
        if (map[v] != 0) out.insert(map[v]);
    });
    return out;
}

EditResult compress(int n, std::span<const Edge> edges, VertexSet keep) {
    Relabeling map(n + 1, 0);
    int next = 0;
    for (VertexId v = 1; v <= n; ++v) {
        if (keep.contains(v)) map[v] = ++next;
    }
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (Edge e : edges) out.push_back(relabel(e, map));
    return {Hypergraph(next, std::move(out)), std::move(map)};
}

EditResult delete_vertices(const Hypergraph& h, VertexSet x) {
    if (!x.subset_of(h.vertices())) throw Error(ErrorCode::BadVertexId, "vertex set " + x.to_string() + " not inside V(H)");
    std::vector<Edge> kept;
    for (Edge e : h.edges()) {
        if (!e.intersects(x)) kept.push_back(e);
    }
    return compress(h.num_vertices(), kept, h.vertices() - x);
}

EditResult delete_edges(const Hypergraph& h, std::span<const Edge> removed) {
    std::vector<bool> drop(h.num_edges(), false);
    VertexSet touched;
    for (Edge e : removed) {
        auto idx = h.find_edge(e);
        if (!idx) throw Error(ErrorCode::UnknownEdge, "edge " + e.to_string() + " not in hypergraph");
        drop[*idx] = true;
        touched |= e;
    }
    std::vector<Edge> kept;
    VertexSet covered;
    for (int i = 0; i < h.num_edges(); ++i) {
        if (drop[i]) continue;
        kept.push_back(h.edge(i));
        covered |= h.edge(i);
    }
    // Only vertices whose degree fell to zero go; already-isolated ones stay.
    return compress(h.num_vertices(), kept, h.vertices() - (touched - covered));
}

EditResult shrink_edge(const Hypergraph& h, Edge e, VertexId v) {
    auto idx = h.find_edge(e);
    if (!idx) throw Error(ErrorCode::UnknownEdge, "edge " + e.to_string() + " not in hypergraph");
    if (!e.contains(v)) {
        throw Error(ErrorCode::VertexNotInEdge, "vertex " + std::to_string(v) + " not in edge " + e.to_string());
    }
    Edge shrunk = e;
    shrunk.erase(v);
    if (shrunk.size() < 2) {
        throw Error(ErrorCode::EdgeTooSmallAfterShrink, "shrinking " + e.to_string() + " leaves fewer than 2 vertices");
    }
    if (h.has_edge(shrunk)) {
        throw Error(ErrorCode::DuplicateEdgeAfterShrink, "shrinking " + e.to_string() + " duplicates " + shrunk.to_string());
    }
    std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    edges[*idx] = shrunk;
    VertexSet keep = h.vertices();
    if (degree(h, v) == 1) keep.erase(v);
    return compress(h.num_vertices(), edges, keep);
}

}  // namespace hyperdom
