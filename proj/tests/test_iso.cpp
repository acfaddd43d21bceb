#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hyperdom/iso.hpp"
#include "oracle.hpp"

using namespace hyperdom;
using testing_support::named;
using testing_support::random_pool;

namespace {

Relabeling random_permutation(int n, std::uint64_t seed) {
    Relabeling p(n + 1, 0);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    std::mt19937_64 rng(seed);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int v = 1; v <= n; ++v) p[v] = ids[v - 1];
    return p;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    for (auto n : {ConstructionName::Fano, ConstructionName::FanoMinus, ConstructionName::F1, ConstructionName::F1Minus,
                   ConstructionName::F2, ConstructionName::F3}) {
        const auto h = named(n);
        const auto code = canonical_form(h).code;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto p = apply_permutation(h, random_permutation(h.num_vertices(), seed));
            CHECK(canonical_form(p).code == code);
            const auto map = find_isomorphism(h, p);
            REQUIRE(map);
            CHECK(apply_permutation(h, *map) == p);
        }
    }
}

TEST_CASE("canonical forms separate non-isomorphic constructions") {
    CHECK(canonical_form(named(ConstructionName::F2)).code != canonical_form(named(ConstructionName::F3)).code);
    CHECK(canonical_form(named(ConstructionName::F1Minus)).code != canonical_form(named(ConstructionName::F1)).code);
    CHECK_FALSE(is_isomorphic(named(ConstructionName::F2), named(ConstructionName::F3)));
}

TEST_CASE("F- is the same whichever line is deleted") {
    const auto f = named(ConstructionName::Fano);
    const Edge first = f.edge(0), fifth = f.edge(4);
    const auto a = delete_edges(f, std::span(&first, 1)).graph;
    const auto b = delete_edges(f, std::span(&fifth, 1)).graph;
    CHECK(a != b);
    CHECK(is_isomorphic(a, b));
}

TEST_CASE("quick reject never reports isomorphism across invariants") {
    const auto a = Hypergraph::from_lists(4, {{1, 2, 3}, {2, 4}});
    const auto b = Hypergraph::from_lists(4, {{1, 2, 3}, {3, 4}});
    const auto c = Hypergraph::from_lists(4, {{1, 2, 3}, {1, 4}});
    const auto d = Hypergraph::from_lists(4, {{1, 2}, {3, 4}});
    CHECK(is_isomorphic(a, b));
    CHECK(is_isomorphic(a, c));
    CHECK_FALSE(is_isomorphic(a, d));
    CHECK_FALSE(is_isomorphic(a, Hypergraph::from_lists(5, {{1, 2, 3}, {2, 4}})));
}

TEST_CASE("isomorphism agrees with exhaustive permutation search") {
    // Small instances on the same (n, m) so many pairs are non-trivial.
    std::vector<Hypergraph> pool;
    for (std::uint64_t seed = 0; pool.size() < 40; ++seed) pool.push_back(random_hypergraph(3, 6, 4, seed));
    int iso_pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i; j < pool.size(); ++j) {
            const bool expected = oracle::isomorphic(oracle::from(pool[i]), oracle::from(pool[j]));
            CHECK(is_isomorphic(pool[i], pool[j]) == expected);
            CHECK((canonical_form(pool[i]).code == canonical_form(pool[j]).code) == expected);
            iso_pairs += expected && i != j;
        }
    }
    CHECK(iso_pairs > 0);
}

TEST_CASE("size guard") {
    try {
        canonical_form(Hypergraph(21, {}));
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("printable code") {
    CHECK(canonical_form(Hypergraph::from_lists(3, {{1, 2}})).code.to_string() == "3:1|2.3");
}
