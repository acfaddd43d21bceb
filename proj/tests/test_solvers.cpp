#include <doctest.h>

#include "helpers.hpp"
#include "hyperdom/solvers.hpp"
#include "oracle.hpp"

using namespace hyperdom;
using testing_support::named;
using testing_support::random_pool;

TEST_CASE("domination number") {
    CHECK(domination_number(named(ConstructionName::Fano)).value == 1);
    CHECK(domination_number(named(ConstructionName::F1)).value == 3);
    CHECK(domination_number(Hypergraph::from_lists(4, {{1, 2, 3, 4}})).value == 1);
    for (auto n : {ConstructionName::F2, ConstructionName::F3, ConstructionName::F1Minus}) {
        const auto w = domination_number(named(n));
        CHECK(w.value == 3);
        CHECK(certificate_valid(named(n), w));
    }
    CHECK_THROWS_AS(domination_number(Hypergraph(0, {})), Error);
}

TEST_CASE("isolated vertices are forced into the dominating set") {
    const auto h = Hypergraph::from_lists(5, {{1, 2, 3}});
    const auto w = domination_number(h);
    CHECK(w.value == 3);
    CHECK(w.vertices == VertexSet{1, 4, 5});
    CHECK(domination_number(Hypergraph(2, {})).value == 2);
}

TEST_CASE("transversal number") {
    CHECK(transversal_number(named(ConstructionName::Fano)).value == 3);
    CHECK(transversal_number(named(ConstructionName::F1)).value == 3);
    CHECK(transversal_number(Hypergraph::from_lists(2, {{1, 2}})).value == 1);
    CHECK_THROWS_AS(transversal_number(Hypergraph(3, {})), Error);
}

TEST_CASE("matching number") {
    for (const auto& c : family_L()) CHECK(matching_number(c.graph).value == 1);
    const auto two = matching_number(Hypergraph::from_lists(4, {{1, 2}, {3, 4}}));
    CHECK(two.value == 2);
    CHECK(two.edges == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(matching_number(named(ConstructionName::FanoMinus)).value == 1);
    CHECK_THROWS_AS(matching_number(Hypergraph(3, {})), Error);
}

TEST_CASE("quasidegree") {
    const auto f = named(ConstructionName::Fano);
    for (VertexId v = 1; v <= 7; ++v) {
        const auto w = quasidegree(f, v);
        CHECK(w.value == 3);
        CHECK(certificate_valid(f, w));
    }
    const auto fm = named(ConstructionName::FanoMinus);
    for (VertexId v : {1, 2, 3}) CHECK(quasidegree(fm, v).value == 2);

    const auto overlap = Hypergraph::from_lists(4, {{1, 2, 3}, {1, 2, 4}});
    CHECK(quasidegree(overlap, 1).value == 1);

    const auto sparse = Hypergraph::from_lists(4, {{1, 2}});
    CHECK(quasidegree(sparse, 1).value == 1);
    CHECK(quasidegree(sparse, 4).value == 0);
    CHECK_THROWS_AS(quasidegree(sparse, 5), Error);

    for (const auto& h : random_pool(40, 11)) {
        for (VertexId v = 1; v <= h.num_vertices(); ++v) CHECK(quasidegree(h, v).value <= degree(h, v));
    }
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_invariant(named(ConstructionName::Fano), InvariantKind::Domination).value == 1);
    CHECK(brute_force_invariant(named(ConstructionName::F1), InvariantKind::Transversal).value == 3);
    CHECK(brute_force_invariant(named(ConstructionName::F3), InvariantKind::Matching).value == 1);
    CHECK(brute_force_invariant(named(ConstructionName::Fano), InvariantKind::Quasidegree, 4).value == 3);

    std::vector<Edge> many;
    for (int i = 1; i <= 13; ++i) many.push_back({i, i + 1});
    try {
        brute_force_invariant(Hypergraph(14, many), InvariantKind::Matching);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK_THROWS_AS(brute_force_invariant(Hypergraph(21, {}), InvariantKind::Domination), Error);
    CHECK_THROWS_AS(brute_force_invariant(Hypergraph(3, {}), InvariantKind::Transversal), Error);
}

TEST_CASE("dedicated solvers agree with brute force and the set-based oracle") {
    auto pool = random_pool(150, 4242);
    for (auto n : {ConstructionName::Fano, ConstructionName::FanoMinus, ConstructionName::F1, ConstructionName::F1Minus,
                   ConstructionName::F2, ConstructionName::F3}) {
        pool.push_back(named(n));
    }
    for (const auto& h : pool) {
        const auto g = oracle::from(h);
        const auto gamma = domination_number(h);
        const auto tau = transversal_number(h);
        const auto alpha = matching_number(h);
        const auto bf_gamma = brute_force_invariant(h, InvariantKind::Domination);
        const auto bf_tau = brute_force_invariant(h, InvariantKind::Transversal);
        const auto bf_alpha = brute_force_invariant(h, InvariantKind::Matching);

        CHECK(gamma.value == bf_gamma.value);
        CHECK(tau.value == bf_tau.value);
        CHECK(alpha.value == bf_alpha.value);
        // Both sides return the lexicographically least optimum.
        CHECK(gamma.vertices == bf_gamma.vertices);
        CHECK(tau.vertices == bf_tau.vertices);
        CHECK(alpha.edges == bf_alpha.edges);

        for (const auto* w : {&gamma, &tau, &alpha, &bf_gamma, &bf_tau, &bf_alpha}) CHECK(certificate_valid(h, *w));

        if (h.num_vertices() <= 14) {
            CHECK(gamma.value == oracle::gamma(g));
            CHECK(tau.value == oracle::tau(g));
        }
        CHECK(alpha.value == oracle::alpha(g));

        for (VertexId v = 1; v <= h.num_vertices(); ++v) {
            const auto qd = quasidegree(h, v);
            const auto bf = brute_force_invariant(h, InvariantKind::Quasidegree, v);
            CHECK(qd.value == bf.value);
            CHECK(qd.edges == bf.edges);
            CHECK(qd.value == oracle::qd(g, v));
            CHECK(certificate_valid(h, qd));
        }
    }
}

TEST_CASE("inequalities between the invariants") {
    for (const auto& h : random_pool(200, 99)) {
        const int r = rank(h);
        const int gamma = domination_number(h).value;
        const int tau = transversal_number(h).value;
        const int alpha = matching_number(h).value;
        CHECK(gamma <= tau);  // pool has no isolated vertices
        CHECK(alpha <= tau);
        CHECK(gamma <= (r - 1) * alpha);
        if (r == 2) CHECK(gamma <= alpha);
        if (is_intersecting(h)) CHECK(gamma <= r - 1);
    }
}

TEST_CASE("certificate checker rejects bad witnesses") {
    const auto f = named(ConstructionName::Fano);
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Transversal, 2, {1, 2}, {}, 0}));
    CHECK(certificate_valid(f, {InvariantKind::Transversal, 3, VertexSet::from_ids({1, 2, 3}), {}, 0}));
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Transversal, 3, VertexSet::from_ids({1, 2, 4}), {}, 0}));
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Transversal, 2, VertexSet::from_ids({1, 2, 3}), {}, 0}));
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Matching, 2, {}, {f.edge(0), f.edge(1)}, 0}));
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Quasidegree, 2, {}, {f.edge(0), f.edge(3)}, 1}));
    CHECK_FALSE(certificate_valid(f, {InvariantKind::Matching, 1, {}, {Edge{1, 2}}, 0}));
    const auto h = Hypergraph::from_lists(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(certificate_valid(h, {InvariantKind::Domination, 1, {1}, {}, 0}));
    CHECK(certificate_valid(h, {InvariantKind::Domination, 2, {1, 3}, {}, 0}));
}
