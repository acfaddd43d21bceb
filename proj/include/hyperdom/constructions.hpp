#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdom/hypergraph.hpp"

namespace hyperdom {

/// The Fano plane and the rank-4 hypergraphs built on top of it.
enum class ConstructionName { Fano, FanoMinus, F1, F1Minus, F2, F3 };

/// CLI-facing identifiers: "F", "F-", "F1", "F1-", "F2", "F3".
std::string_view to_string(ConstructionName name);
/// Throws UnknownName.
ConstructionName parse_construction_name(std::string_view text);
bool is_construction_name(std::string_view text);

struct NamedConstruction {
    ConstructionName name;
    Hypergraph graph;
    /// Vertices by degree: by_degree[d] holds the degree-d vertices.
    std::vector<VertexSet> by_degree;
};

NamedConstruction generate(ConstructionName name);

/// {F1, F1-, F2, F3}
std::vector<NamedConstruction> family_L();

/// Every F1- + {x1,x2,x3,x4} with d(x1) = d(x2) = 2, d(x3) = d(x4) = 1 that is
/// linear and intersecting. generate(F3) uses the shortlex-least of these.
std::vector<Hypergraph> enumerate_f3_candidates();

inline constexpr int kRandomMaxAttempts = 1000;

/// Seeded hypergraph with edge sizes in [2, r], rank exactly r, m distinct
/// edges and no isolated vertex. Whole instances are resampled until valid;
/// throws Infeasible when parameters cannot work or attempts run out.
Hypergraph random_hypergraph(int r, int n, int m, std::uint64_t seed);

}  // namespace hyperdom
