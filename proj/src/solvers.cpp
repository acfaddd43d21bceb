#include "hyperdom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace hyperdom {

std::string_view to_string(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::Domination: return "domination";
        case InvariantKind::Transversal: return "transversal";
        case InvariantKind::Matching: return "matching";
        case InvariantKind::Quasidegree: return "quasidegree";
    }
    return "unknown";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask above(int i) { return i >= 63 ? 0 : (~Mask{0} << (i + 1)); }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

// Minimum cover of a universe of <= 64 elements by candidate sets, searched by
// iterative deepening on the cover size with branching on the element that
// has the fewest remaining candidates.
class CoverSearch {
public:
    explicit CoverSearch(std::vector<Mask> covers) : covers_(std::move(covers)) {}

    bool feasible(Mask uncovered, Mask allowed, int budget) const {
        if (uncovered == 0) return true;
        if (budget == 0) return false;

        int best_gain = 0;
        for (Mask a = allowed; a != 0; a &= a - 1) {
            best_gain = std::max(best_gain, std::popcount(covers_[std::countr_zero(a)] & uncovered));
        }
        if (best_gain == 0 || best_gain * budget < std::popcount(uncovered)) return false;

        Mask branch = 0;
        int fewest = 65;
        for (Mask u = uncovered; u != 0; u &= u - 1) {
            const int elem = std::countr_zero(u);
            Mask options = 0;
            for (Mask a = allowed; a != 0; a &= a - 1) {
                const int c = std::countr_zero(a);
                if ((covers_[c] >> elem) & 1U) options |= Mask{1} << c;
            }
            const int count = std::popcount(options);
            if (count == 0) return false;
            if (count < fewest) {
                fewest = count;
                branch = options;
            }
        }
        for (Mask b = branch; b != 0; b &= b - 1) {
            const int c = std::countr_zero(b);
            if (feasible(uncovered & ~covers_[c], allowed, budget - 1)) return true;
            // Covers containing c were all explored above.
            allowed &= ~(Mask{1} << c);
        }
        return false;
    }

    // Lexicographically least minimum cover, as candidate indices.
    std::vector<int> solve(Mask universe) const {
        const Mask all = low_bits(static_cast<int>(covers_.size()));
        int k = 0;
        while (!feasible(universe, all, k)) ++k;

        std::vector<int> chosen;
        Mask uncovered = universe;
        int last = -1;
        for (int pos = 0; pos < k; ++pos) {
            for (int c = last + 1; c < static_cast<int>(covers_.size()); ++c) {
                if (feasible(uncovered & ~covers_[c], all & above(c), k - pos - 1)) {
                    chosen.push_back(c);
                    uncovered &= ~covers_[c];
                    last = c;
                    break;
                }
            }
        }
        return chosen;
    }

private:
    std::vector<Mask> covers_;
};

// Maximum clique on <= 64 nodes given adjacency masks.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    bool has_clique(Mask pool, int size) const {
        if (size == 0) return true;
        if (std::popcount(pool) < size) return false;
        for (Mask p = pool; p != 0; p &= p - 1) {
            const int v = std::countr_zero(p);
            if (std::popcount(p) < size) return false;
            if (has_clique(pool & adj_[v] & above(v), size - 1)) return true;
        }
        return false;
    }

    std::vector<int> solve() const {
        const Mask all = low_bits(static_cast<int>(adj_.size()));
        int k = greedy_size(all);
        while (has_clique(all, k + 1)) ++k;

        std::vector<int> chosen;
        Mask pool = all;
        for (int pos = 0; pos < k; ++pos) {
            for (Mask p = pool; p != 0; p &= p - 1) {
                const int v = std::countr_zero(p);
                const Mask next = pool & adj_[v] & above(v);
                if (has_clique(next, k - pos - 1)) {
                    chosen.push_back(v);
                    pool = next;
                    break;
                }
            }
        }
        return chosen;
    }

private:
    int greedy_size(Mask pool) const {
        int size = 0;
        while (pool != 0) {
            const int v = std::countr_zero(pool);
            ++size;
            pool &= adj_[v] & above(v);
        }
        return size;
    }

    std::vector<Mask> adj_;
};

void require_edges(const Hypergraph& h, std::string_view what) {
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, std::string(what) + " of a hypergraph without edges");
    if (h.num_edges() > 64) throw Error(ErrorCode::TooLarge, std::string(what) + " supports at most 64 edges");
}

VertexSet vertices_from_indices(const std::vector<int>& idx) {
    VertexSet s;
    for (int i : idx) s.insert(i + 1);
    return s;
}

}  // namespace

InvariantWitness domination_number(const Hypergraph& h) {
    if (h.num_vertices() == 0) throw Error(ErrorCode::EmptyHypergraph, "domination number of a hypergraph without vertices");
    std::vector<Mask> covers;
    for (VertexId v = 1; v <= h.num_vertices(); ++v) covers.push_back(closed_neighborhood(h, v).bits());
    const auto chosen = CoverSearch(std::move(covers)).solve(h.vertices().bits());
    const VertexSet d = vertices_from_indices(chosen);
    return {InvariantKind::Domination, d.size(), d, {}, 0};
}

InvariantWitness transversal_number(const Hypergraph& h) {
    require_edges(h, "transversal number");
    std::vector<Mask> covers(h.num_vertices(), 0);
    for (int i = 0; i < h.num_edges(); ++i) {
        h.edge(i).for_each([&](VertexId v) { covers[v - 1] |= Mask{1} << i; });
    }
    const auto chosen = CoverSearch(std::move(covers)).solve(low_bits(h.num_edges()));
    const VertexSet t = vertices_from_indices(chosen);
    return {InvariantKind::Transversal, t.size(), t, {}, 0};
}

InvariantWitness matching_number(const Hypergraph& h) {
    require_edges(h, "matching number");
    const int m = h.num_edges();
    std::vector<Mask> adj(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && !h.edge(i).intersects(h.edge(j))) adj[i] |= Mask{1} << j;
        }
    }
    InvariantWitness w{InvariantKind::Matching, 0, {}, {}, 0};
    for (int i : CliqueSearch(std::move(adj)).solve()) w.edges.push_back(h.edge(i));
    w.value = static_cast<int>(w.edges.size());
    return w;
}

InvariantWitness quasidegree(const Hypergraph& h, VertexId v) {
    if (!h.valid_vertex(v)) throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " not in hypergraph");
    std::vector<Edge> incident;
    for (Edge e : h.edges()) {
        if (e.contains(v)) incident.push_back(e);
    }
    if (incident.size() > 64) throw Error(ErrorCode::TooLarge, "quasidegree supports at most 64 incident edges");
    const VertexSet only_v{v};
    std::vector<Mask> adj(incident.size(), 0);
    for (std::size_t i = 0; i < incident.size(); ++i) {
        for (std::size_t j = 0; j < incident.size(); ++j) {
            if (i != j && (incident[i] & incident[j]) == only_v) adj[i] |= Mask{1} << j;
        }
    }
    InvariantWitness w{InvariantKind::Quasidegree, 0, {}, {}, v};
    if (incident.empty()) return w;
    for (int i : CliqueSearch(std::move(adj)).solve()) w.edges.push_back(incident[i]);
    w.value = static_cast<int>(w.edges.size());
    return w;
}

// ---------------------------------------------------------------------------
// Brute force. Plain lexicographic combination enumeration.

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order
// until visit returns true. Returns whether any call returned true.
template <typename Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
    if (k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool dominates(const Hypergraph& h, const std::vector<VertexId>& d) {
    const std::set<VertexId> in(d.begin(), d.end());
    for (VertexId v = 1; v <= h.num_vertices(); ++v) {
        if (in.count(v)) continue;
        bool ok = false;
        for (Edge e : h.edges()) {
            if (!e.contains(v)) continue;
            for (VertexId u : d) ok = ok || e.contains(u);
        }
        if (!ok) return false;
    }
    return true;
}

bool hits_all(const Hypergraph& h, const std::vector<VertexId>& t) {
    for (Edge e : h.edges()) {
        bool hit = false;
        for (VertexId u : t) hit = hit || e.contains(u);
        if (!hit) return false;
    }
    return true;
}

bool pairwise_meet_exactly(const std::vector<Edge>& edges, VertexSet required) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if ((edges[i] & edges[j]) != required) return false;
        }
    }
    return true;
}

}  // namespace

InvariantWitness brute_force_invariant(const Hypergraph& h, InvariantKind kind, VertexId focus) {
    if (h.num_vertices() > kBruteForceMaxVertices || h.num_edges() > kBruteForceMaxEdges) {
        throw Error(ErrorCode::TooLarge, "brute force limited to 20 vertices and 12 edges");
    }
    InvariantWitness w{kind, 0, {}, {}, 0};
    const int n = h.num_vertices();

    if (kind == InvariantKind::Domination || kind == InvariantKind::Transversal) {
        if (kind == InvariantKind::Domination && n == 0) {
            throw Error(ErrorCode::EmptyHypergraph, "domination number of a hypergraph without vertices");
        }
        if (kind == InvariantKind::Transversal && h.num_edges() == 0) {
            throw Error(ErrorCode::EmptyHypergraph, "transversal number of a hypergraph without edges");
        }
        for (int k = 0; k <= n; ++k) {
            const bool found = for_each_combination(n, k, [&](const std::vector<int>& idx) {
                std::vector<VertexId> set;
                for (int i : idx) set.push_back(i + 1);
                const bool ok = kind == InvariantKind::Domination ? dominates(h, set) : hits_all(h, set);
                if (ok) w.vertices = VertexSet::from_ids(set);
                return ok;
            });
            if (found) {
                w.value = k;
                return w;
            }
        }
        return w;  // unreachable: V(H) itself always qualifies
    }

    std::vector<Edge> pool;
    VertexSet required;
    if (kind == InvariantKind::Matching) {
        if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, "matching number of a hypergraph without edges");
        pool.assign(h.edges().begin(), h.edges().end());
    } else {
        if (!h.valid_vertex(focus)) throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(focus) + " not in hypergraph");
        w.focus = focus;
        required = VertexSet{focus};
        for (Edge e : h.edges()) {
            if (e.contains(focus)) pool.push_back(e);
        }
    }
    const int m = static_cast<int>(pool.size());
    for (int k = 0; k <= m; ++k) {
        for_each_combination(m, k, [&](const std::vector<int>& idx) {
            std::vector<Edge> family;
            for (int i : idx) family.push_back(pool[i]);
            if (!pairwise_meet_exactly(family, required)) return false;
            w.value = k;
            w.edges = std::move(family);
            return true;
        });
    }
    return w;
}

bool certificate_valid(const Hypergraph& h, const InvariantWitness& w) {
    switch (w.kind) {
        case InvariantKind::Domination:
            return w.vertices.subset_of(h.vertices()) && w.vertices.size() == w.value && dominates(h, w.vertices.members());
        case InvariantKind::Transversal:
            return w.vertices.subset_of(h.vertices()) && w.vertices.size() == w.value && hits_all(h, w.vertices.members());
        case InvariantKind::Matching:
        case InvariantKind::Quasidegree: {
            if (static_cast<int>(w.edges.size()) != w.value) return false;
            std::set<std::uint64_t> distinct;
            for (Edge e : w.edges) {
                if (!h.has_edge(e)) return false;
                if (w.kind == InvariantKind::Quasidegree && !e.contains(w.focus)) return false;
                distinct.insert(e.bits());
            }
            if (distinct.size() != w.edges.size()) return false;
            const VertexSet required = w.kind == InvariantKind::Matching ? VertexSet{} : VertexSet{w.focus};
            return pairwise_meet_exactly(w.edges, required);
        }
    }
    return false;
}

}  // namespace hyperdom
