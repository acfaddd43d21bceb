#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hyperdom/hypergraph.hpp"

namespace hyperdom {

inline constexpr int kIsoMaxVertices = 20;

/// Isomorphism-invariant key: n, m, then the canonically relabeled edges in
/// shortlex order, each as its size followed by its members. Two hypergraphs
/// get equal codes exactly when they are isomorphic.
struct CanonicalCode {
    std::vector<int> code;

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

    /// Compact printable form, e.g. "7:7|1.2.3|1.4.5|...".
    std::string to_string() const;
};

struct CanonicalForm {
    CanonicalCode code;
    /// labeling[v] = canonical label of vertex v (index 0 unused).
    Relabeling labeling;
};

/// Throws TooLarge above kIsoMaxVertices vertices.
CanonicalForm canonical_form(const Hypergraph& h);

/// When A and B are isomorphic, returns a map a -> b (index 0 unused) that
/// carries E(A) onto E(B); the map is checked against the edge lists before
/// being returned.
std::optional<Relabeling> find_isomorphism(const Hypergraph& a, const Hypergraph& b);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

/// Applies a vertex bijection to every edge.
Hypergraph apply_permutation(const Hypergraph& h, const Relabeling& perm);

}  // namespace hyperdom
