#include <doctest.h>

#include <cstdlib>

#include "hyperdom/harness.hpp"
#include "hyperdom/iso.hpp"
#include "hyperdom/solvers.hpp"

using namespace hyperdom;

TEST_CASE("check_lemmas passes on F1 and fails on a single edge") {
    const auto pass = check_lemmas(generate(ConstructionName::F1).graph, "F1", 4);
    CHECK(pass.passed());
    CHECK(pass.verdict() == "PASS");

    const auto fail = check_lemmas(Hypergraph::from_lists(4, {{1, 2, 3, 4}}), "single", 4);
    CHECK_FALSE(fail.passed());
    bool saw_gamma = false;
    for (const auto& c : fail.checks) {
        if (c.name == "chain.gamma_tau") {
            saw_gamma = true;
            CHECK(c.details["gamma_h"] == 1);
        }
    }
    CHECK(saw_gamma);
}

TEST_CASE("forward direction") {
    const auto rep = verify_theorem_forward();
    CHECK(rep.passed());
    for (const auto& c : rep.checks) {
        if (c.name == "F1.edge_minus_pendant_dominates") CHECK(c.details["edges_checked"] == 7);
    }
}

TEST_CASE("extension search over F1 finds nothing") {
    const auto rep = extension_search(ConstructionName::F1, {});
    CHECK(rep.passed());
    CHECK(rep.findings["admissible_single_edges"] == 0);
    CHECK(rep.findings["candidates"] == 0);
}

TEST_CASE("extension search over F1- finds exactly F2 and F3 at gamma 3") {
    ExtensionOptions opts;
    opts.max_added = 1;
    const auto rep = extension_search(ConstructionName::F1Minus, opts);
    CHECK(rep.passed());
    int gamma3_classes = 0;
    for (const auto& cls : rep.findings["classes"]) {
        if (cls["gamma"] == 3) {
            ++gamma3_classes;
            CHECK((cls["member_of_L"] == "F2" || cls["member_of_L"] == "F3"));
        } else {
            CHECK(cls["gamma"] <= 2);
        }
    }
    CHECK(gamma3_classes == 2);
}

TEST_CASE("extension search results do not depend on the worker count") {
    ExtensionOptions one, many;
    many.threads = 4;
    const auto a = extension_search(ConstructionName::F1Minus, one);
    const auto b = extension_search(ConstructionName::F1Minus, many);
    CHECK(a.to_json(false) == b.to_json(false));
}

TEST_CASE("extension search enforces its budget") {
    ExtensionOptions opts;
    opts.budget = 100;
    try {
        extension_search(ConstructionName::F1Minus, opts);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK_THROWS_AS(extension_search(ConstructionName::F2, {}), Error);
}

TEST_CASE("bound verification") {
    const auto r4 = verify_bound(4, 60, 42);
    CHECK(r4.passed());
    const auto r2 = verify_bound(2, 60, 42);
    CHECK(r2.passed());
    bool chain = false;
    for (const auto& c : r2.checks) chain = chain || c.name == "graph_gamma_le_alpha_le_tau";
    CHECK(chain);
    CHECK_THROWS_AS(verify_bound(6, 10, 1), Error);
    CHECK_THROWS_AS(verify_bound(3, 0, 1), Error);
}

TEST_CASE("random instances for the bound stay within the stated shape") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        for (int r : {2, 3, 4, 5}) {
            RandomShape shape{};
            const auto h = random_instance(r, seed, &shape);
            CHECK(shape.n <= 12);
            CHECK(shape.m <= 8);
            CHECK(h.num_vertices() == shape.n);
            CHECK(h.num_edges() == shape.m);
            CHECK(rank(h) == r);
            CHECK(isolated_vertices(h).empty());
        }
    }
}

TEST_CASE("worker count from the environment") {
    setenv("HYPERDOM_THREADS", "3", 1);
    CHECK(worker_count_from_env() == 3);
    setenv("HYPERDOM_THREADS", "0", 1);
    CHECK(worker_count_from_env() >= 1);
    unsetenv("HYPERDOM_THREADS");
}

TEST_CASE("report rendering") {
    VerificationReport rep;
    rep.command = "demo";
    rep.add("ok", true);
    rep.add("bad", false, {{"value", 2}});
    rep.elapsed_ms = 12.5;
    CHECK(rep.verdict() == "FAIL");
    const auto j = rep.to_json();
    CHECK(j["verdict"] == "FAIL");
    CHECK(j["elapsed_ms"] == 12.5);
    CHECK_FALSE(rep.to_json(false).contains("elapsed_ms"));
    const std::string text = rep.to_text(false);
    CHECK(text.find("  FAIL  bad  {\"value\":2}") != std::string::npos);
    CHECK(text.find("verdict: FAIL (2 checks, 1 failed)") != std::string::npos);

    VerificationReport outer;
    outer.absorb("inner", rep);
    CHECK(outer.checks.size() == 2);
    CHECK(outer.checks[0].name == "inner/ok");
}
