#pragma once

#include <cstdint>
#include <vector>

#include "hyperdom/constructions.hpp"

namespace testing_support {

inline hyperdom::Hypergraph named(hyperdom::ConstructionName n) { return hyperdom::generate(n).graph; }

/// Seeded instances with r <= 4, n <= 12, m <= 8 and no isolated vertex.
inline std::vector<hyperdom::Hypergraph> random_pool(int count, std::uint64_t seed0 = 1) {
    std::vector<hyperdom::Hypergraph> out;
    std::uint64_t seed = seed0;
    while (static_cast<int>(out.size()) < count) {
        const int r = 2 + static_cast<int>(seed % 3);
        const int n = r + static_cast<int>((seed / 3) % (13 - r));
        const int m = 1 + static_cast<int>((seed / 7) % 8);
        try {
            out.push_back(hyperdom::random_hypergraph(r, n, m, seed));
        } catch (const hyperdom::Error&) {
        }
        ++seed;
    }
    return out;
}

}  // namespace testing_support
