#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperdom/hypergraph.hpp"

namespace hyperdom {

/// Record of the peel H -> H* and the shrink H* -> H'.
struct ReductionTrace {
    Hypergraph input;
    /// Edges removed by the peel, in deletion order (ids of `input`).
    std::vector<Edge> deleted_edges;
    /// Spanning partial hypergraph of `input`: same vertex ids, subset of edges.
    Hypergraph hstar;

    // Filled by shrink_to_hprime.
    std::optional<Hypergraph> hprime;
    /// Edges of hstar paired with the degree-1 vertex removed from each.
    std::vector<std::pair<Edge, VertexId>> pendant_map;
    /// Number of coinciding shrunk edges merged away.
    int dedup_count = 0;
    /// hstar ids -> hprime ids.
    Relabeling hprime_relabel;
};

/// An edge can be peeled when each of its vertices has degree >= 2.
bool peelable(const Hypergraph& h, Edge e);

/// Repeatedly deletes the first peelable edge, where "first" follows
/// `priority` and then canonical order for edges not listed, until every
/// remaining edge contains a degree-1 vertex. Vertices are never dropped.
/// With an empty priority list this is the deterministic policy (canonically
/// least peelable edge each round). Throws EmptyHypergraph.
ReductionTrace peel_to_hstar(const Hypergraph& h, std::span<const Edge> priority = {});

/// Removes each hstar edge's unique degree-1 vertex, merges coinciding
/// edges, and drops isolated vertices. Throws MultiplePendants or NoPendant
/// when an edge does not have exactly one degree-1 vertex, and
/// EdgeTooSmallAfterShrink when a 2-edge would collapse.
ReductionTrace shrink_to_hprime(ReductionTrace trace);

struct PeelOutcome {
    /// One admissible deletion order reaching this outcome.
    std::vector<Edge> order;
    Hypergraph hstar;
};

struct PeelEnumeration {
    /// Distinct terminal hypergraphs over all admissible orders, sorted by
    /// deleted-edge set.
    std::vector<PeelOutcome> outcomes;
    /// Number of distinct complete admissible deletion sequences.
    std::uint64_t order_count = 0;
};

/// Explores every admissible deletion order of the peel. Limited to 64 edges.
PeelEnumeration enumerate_peel_outcomes(const Hypergraph& h);

struct LemmaClause {
    std::string id;
    std::string statement;
    bool holds = false;
    nlohmann::json details;
};

struct LemmaReport {
    int r = 0;
    std::vector<LemmaClause> clauses;
    /// Present when the pipeline reached that stage.
    std::optional<ReductionTrace> trace;
    std::optional<std::string> pipeline_error;

    bool all_hold() const;
    const LemmaClause* find(std::string_view id) const;
};

/// Runs peel and shrink on H, computes the invariants involved, and records
/// whether each structural claim about the rank-r case holds. Inputs outside
/// the characterized class are processed, not rejected; clauses that need a
/// stage the pipeline could not reach are recorded as failing.
LemmaReport reduction_report(const Hypergraph& h, int r);

nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const LemmaReport& report);

}  // namespace hyperdom
