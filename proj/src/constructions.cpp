#include "hyperdom/constructions.hpp"

#include <algorithm>
#include <random>

namespace hyperdom {

namespace {

constexpr std::string_view kNames[] = {"F", "F-", "F1", "F1-", "F2", "F3"};

const std::vector<std::vector<VertexId>> kFanoLines = {
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
};

Hypergraph fano() { return Hypergraph::from_lists(7, kFanoLines); }

Hypergraph fano_minus() {
    const Hypergraph f = fano();
    const Edge least = f.edge(0);
    return delete_edges(f, std::span(&least, 1)).graph;
}

// One fresh pendant per edge, numbered n+1, n+2, ... in canonical edge order.
Hypergraph add_pendants(const Hypergraph& h) {
    std::vector<Edge> edges;
    int next = h.num_vertices();
    for (Edge e : h.edges()) {
        e.insert(++next);
        edges.push_back(e);
    }
    return Hypergraph(next, std::move(edges));
}

Hypergraph f2() {
    const Hypergraph f1 = add_pendants(fano());
    const Edge least = f1.edge(0);
    // The pendant of an F1 edge is its unique vertex beyond the Fano points.
    return shrink_edge(f1, least, least.back()).graph;
}

std::vector<VertexSet> degree_classes(const Hypergraph& h) {
    const DegreeProfile p = degree_profile(h);
    std::vector<VertexSet> out(p.max + 1);
    for (VertexId v = 1; v <= h.num_vertices(); ++v) out[p.degree[v - 1]].insert(v);
    return out;
}

Hypergraph with_edge(const Hypergraph& h, Edge extra) {
    std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    edges.push_back(extra);
    return Hypergraph(h.num_vertices(), std::move(edges));
}

// Added edges f admitted by the F3 definition, in shortlex order.
std::vector<Edge> f3_edges() {
    const Hypergraph base = add_pendants(fano_minus());
    const auto cls = degree_classes(base);
    const auto deg2 = cls[2].members();
    const auto deg1 = cls[1].members();
    std::vector<Edge> out;
    for (std::size_t a = 0; a < deg2.size(); ++a) {
        for (std::size_t b = a + 1; b < deg2.size(); ++b) {
            for (std::size_t c = 0; c < deg1.size(); ++c) {
                for (std::size_t d = c + 1; d < deg1.size(); ++d) {
                    const Edge f{deg2[a], deg2[b], deg1[c], deg1[d]};
                    if (base.has_edge(f)) continue;
                    const Hypergraph h = with_edge(base, f);
                    if (is_linear(h) && is_intersecting(h)) out.push_back(f);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

}  // namespace

std::string_view to_string(ConstructionName name) { return kNames[static_cast<int>(name)]; }

ConstructionName parse_construction_name(std::string_view text) {
    for (int i = 0; i < 6; ++i) {
        if (kNames[i] == text) return static_cast<ConstructionName>(i);
    }
    throw Error(ErrorCode::UnknownName, "no construction named '" + std::string(text) + "'");
}

bool is_construction_name(std::string_view text) {
    return std::find(std::begin(kNames), std::end(kNames), text) != std::end(kNames);
}

NamedConstruction generate(ConstructionName name) {
    Hypergraph h;
    switch (name) {
        case ConstructionName::Fano: h = fano(); break;
        case ConstructionName::FanoMinus: h = fano_minus(); break;
        case ConstructionName::F1: h = add_pendants(fano()); break;
        case ConstructionName::F1Minus: h = add_pendants(fano_minus()); break;
        case ConstructionName::F2: h = f2(); break;
        case ConstructionName::F3: h = with_edge(add_pendants(fano_minus()), f3_edges().front()); break;
    }
    auto classes = degree_classes(h);
    return {name, std::move(h), std::move(classes)};
}

std::vector<NamedConstruction> family_L() {
    return {generate(ConstructionName::F1), generate(ConstructionName::F1Minus), generate(ConstructionName::F2),
            generate(ConstructionName::F3)};
}

std::vector<Hypergraph> enumerate_f3_candidates() {
    const Hypergraph base = add_pendants(fano_minus());
    std::vector<Hypergraph> out;
    for (Edge f : f3_edges()) out.push_back(with_edge(base, f));
    return out;
}

Hypergraph random_hypergraph(int r, int n, int m, std::uint64_t seed) {
    if (r < 2 || n < r || m < 1 || n > kMaxVertices || n > r * m) {
        throw Error(ErrorCode::Infeasible, "no hypergraph with rank " + std::to_string(r) + ", " + std::to_string(n) +
                                               " vertices, " + std::to_string(m) + " edges and no isolated vertex");
    }
    // Distinct edges of size 2..r available on n vertices, capped to avoid overflow.
    double available = 0;
    for (int k = 2; k <= r; ++k) {
        double c = 1;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        available += c;
    }
    if (available < m) throw Error(ErrorCode::Infeasible, "fewer than " + std::to_string(m) + " distinct edges exist");

    std::mt19937_64 rng(seed);
    auto below = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    const VertexSet all = VertexSet::range(n);
    for (int attempt = 0; attempt < kRandomMaxAttempts; ++attempt) {
        std::vector<Edge> edges;
        VertexSet covered;
        bool has_rank_edge = false;
        int stalls = 0;
        while (static_cast<int>(edges.size()) < m && stalls < 1000) {
            // The first edge carries the full rank so rank(H) == r exactly.
            const int size = edges.empty() ? r : 2 + below(r - 1);
            Edge e;
            while (e.size() < size) e.insert(1 + below(n));
            if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
                ++stalls;
                continue;
            }
            has_rank_edge = has_rank_edge || size == r;
            covered |= e;
            edges.push_back(e);
        }
        if (static_cast<int>(edges.size()) == m && has_rank_edge && covered == all) {
            return Hypergraph(n, std::move(edges));
        }
    }
    throw Error(ErrorCode::Infeasible, "no valid instance within " + std::to_string(kRandomMaxAttempts) + " attempts");
}

}  // namespace hyperdom
