#include "hyperdom/reductions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hyperdom/constructions.hpp"
#include "hyperdom/iso.hpp"
#include "hyperdom/solvers.hpp"

namespace hyperdom {

using nlohmann::json;

namespace {

std::vector<int> degrees_of(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(n + 1, 0);
    for (Edge e : edges) e.for_each([&](VertexId v) { ++deg[v]; });
    return deg;
}

bool peelable_in(const std::vector<int>& deg, Edge e) {
    bool ok = true;
    e.for_each([&](VertexId v) { ok = ok && deg[v] >= 2; });
    return ok;
}

json edge_json(Edge e) { return e.members(); }

json edges_json(std::span<const Edge> edges) {
    json out = json::array();
    for (Edge e : edges) out.push_back(edge_json(e));
    return out;
}

json graph_json(const Hypergraph& h) { return {{"n", h.num_vertices()}, {"edges", edges_json(h.edges())}}; }

}  // namespace

bool peelable(const Hypergraph& h, Edge e) {
    const std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    return peelable_in(degrees_of(h.num_vertices(), edges), e);
}

ReductionTrace peel_to_hstar(const Hypergraph& h, std::span<const Edge> priority) {
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, "peeling a hypergraph without edges");

    std::vector<Edge> order(priority.begin(), priority.end());
    for (Edge e : h.edges()) {
        if (std::find(order.begin(), order.end(), e) == order.end()) order.push_back(e);
    }

    ReductionTrace t;
    t.input = h;
    std::vector<Edge> remaining(h.edges().begin(), h.edges().end());
    while (true) {
        const auto deg = degrees_of(h.num_vertices(), remaining);
        auto pick = std::find_if(order.begin(), order.end(), [&](Edge e) {
            return std::find(remaining.begin(), remaining.end(), e) != remaining.end() && peelable_in(deg, e);
        });
        if (pick == order.end()) break;
        t.deleted_edges.push_back(*pick);
        remaining.erase(std::find(remaining.begin(), remaining.end(), *pick));
    }
    t.hstar = Hypergraph(h.num_vertices(), std::move(remaining));
    return t;
}

ReductionTrace shrink_to_hprime(ReductionTrace t) {
    const Hypergraph& hs = t.hstar;
    const DegreeProfile p = degree_profile(hs);
    t.pendant_map.clear();
    std::vector<Edge> shrunk;
    VertexSet removed;
    for (Edge e : hs.edges()) {
        std::vector<VertexId> pendants;
        e.for_each([&](VertexId v) {
            if (p.degree[v - 1] == 1) pendants.push_back(v);
        });
        if (pendants.empty()) throw Error(ErrorCode::NoPendant, "edge " + e.to_string() + " of H* has no degree-1 vertex");
        if (pendants.size() > 1) {
            throw Error(ErrorCode::MultiplePendants,
                        "edge " + e.to_string() + " of H* has " + std::to_string(pendants.size()) + " degree-1 vertices");
        }
        Edge s = e;
        s.erase(pendants.front());
        if (s.size() < 2) {
            throw Error(ErrorCode::EdgeTooSmallAfterShrink, "edge " + e.to_string() + " collapses below size 2");
        }
        t.pendant_map.emplace_back(e, pendants.front());
        removed.insert(pendants.front());
        shrunk.push_back(s);
    }
    std::sort(shrunk.begin(), shrunk.end(), shortlex_less);
    const auto last = std::unique(shrunk.begin(), shrunk.end());
    t.dedup_count = static_cast<int>(shrunk.end() - last);
    shrunk.erase(last, shrunk.end());

    VertexSet covered;
    for (Edge e : shrunk) covered |= e;
    EditResult r = compress(hs.num_vertices(), shrunk, covered);
    t.hprime = std::move(r.graph);
    t.hprime_relabel = std::move(r.relabel);
    return t;
}

PeelEnumeration enumerate_peel_outcomes(const Hypergraph& h) {
    if (h.num_edges() == 0) throw Error(ErrorCode::EmptyHypergraph, "peeling a hypergraph without edges");
    if (h.num_edges() > 64) throw Error(ErrorCode::TooLarge, "peel enumeration supports at most 64 edges");

    const int m = h.num_edges();
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    std::unordered_map<std::uint64_t, std::uint64_t> paths;  // state -> number of completions
    std::map<std::uint64_t, std::vector<Edge>> terminals;     // deleted mask -> an order reaching it

    auto edges_of = [&](std::uint64_t state) {
        std::vector<Edge> out;
        for (int i = 0; i < m; ++i) {
            if ((state >> i) & 1U) out.push_back(h.edge(i));
        }
        return out;
    };

    std::vector<Edge> current;
    auto visit = [&](auto&& self, std::uint64_t state) -> std::uint64_t {
        if (auto it = paths.find(state); it != paths.end()) return it->second;
        const auto deg = degrees_of(h.num_vertices(), edges_of(state));
        std::uint64_t total = 0;
        bool terminal = true;
        for (int i = 0; i < m; ++i) {
            if (!((state >> i) & 1U) || !peelable_in(deg, h.edge(i))) continue;
            terminal = false;
            current.push_back(h.edge(i));
            total += self(self, state & ~(std::uint64_t{1} << i));
            current.pop_back();
        }
        if (terminal) {
            total = 1;
            terminals.emplace(full & ~state, current);
        }
        paths.emplace(state, total);
        return total;
    };

    PeelEnumeration out;
    out.order_count = visit(visit, full);
    for (const auto& [deleted, order] : terminals) {
        out.outcomes.push_back({order, Hypergraph(h.num_vertices(), edges_of(full & ~deleted))});
    }
    return out;
}

bool LemmaReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const LemmaClause& c) { return c.holds; });
}

const LemmaClause* LemmaReport::find(std::string_view id) const {
    auto it = std::find_if(clauses.begin(), clauses.end(), [&](const LemmaClause& c) { return c.id == id; });
    return it == clauses.end() ? nullptr : &*it;
}

LemmaReport reduction_report(const Hypergraph& h, int r) {
    LemmaReport rep;
    rep.r = r;
    auto add = [&](std::string id, std::string statement, bool holds, json details) {
        rep.clauses.push_back({std::move(id), std::move(statement), holds, std::move(details)});
    };
    const int target = r - 1;

    // Membership facts for the class the lemmas talk about.
    const bool intersecting = is_intersecting(h);
    const bool linear = is_linear(h);
    const int h_rank = h.num_edges() ? rank(h) : 0;
    const int gamma_h = domination_number(h).value;
    add("pre.intersecting", "H is intersecting", intersecting, {{"intersecting", intersecting}});
    add("pre.rank", "H has rank r", h_rank == r, {{"rank", h_rank}, {"r", r}});
    add("pre.gamma", "gamma(H) = r-1", gamma_h == target, {{"gamma", gamma_h}, {"expected", target}});
    add("pre.linear", "H is linear", linear, {{"linear", linear}});

    auto unavailable = [&](const std::string& id, const std::string& statement) {
        add(id, statement, false, {{"unavailable", *rep.pipeline_error}});
    };

    ReductionTrace trace;
    try {
        trace = peel_to_hstar(h);
    } catch (const Error& e) {
        rep.pipeline_error = e.what();
    }
    if (rep.pipeline_error) {
        for (const char* id : {"hstar.one_pendant_per_edge", "hstar.uniform", "chain.gamma_tau"}) unavailable(id, id);
        return rep;
    }

    const Hypergraph& hs = trace.hstar;
    const DegreeProfile ps = degree_profile(hs);
    json pendant_counts = json::array();
    bool exactly_one = true;
    for (Edge e : hs.edges()) {
        int count = 0;
        e.for_each([&](VertexId v) { count += ps.degree[v - 1] == 1; });
        pendant_counts.push_back(count);
        exactly_one = exactly_one && count == 1;
    }
    add("hstar.one_pendant_per_edge", "every edge of H* has exactly one degree-1 vertex", exactly_one,
        {{"pendants_per_edge", pendant_counts}, {"deleted_edges", edges_json(trace.deleted_edges)}});
    const bool hs_uniform = hs.num_edges() > 0 && is_uniform(hs, r);
    add("hstar.uniform", "H* is r-uniform and spanning", hs_uniform && hs.num_vertices() == h.num_vertices(),
        {{"uniform", hs_uniform}, {"n_hstar", hs.num_vertices()}, {"n_h", h.num_vertices()}});

    const int gamma_hs = domination_number(hs).value;
    const int tau_hs = transversal_number(hs).value;
    std::optional<int> tau_hp;
    try {
        trace = shrink_to_hprime(std::move(trace));
        tau_hp = transversal_number(*trace.hprime).value;
    } catch (const Error& e) {
        rep.pipeline_error = e.what();
    }

    json chain = {{"gamma_h", gamma_h}, {"gamma_hstar", gamma_hs}, {"tau_hstar", tau_hs}, {"expected", target}};
    chain["tau_hprime"] = tau_hp ? json(*tau_hp) : json(nullptr);
    add("chain.gamma_tau", "gamma(H) = gamma(H*) = tau(H*) = tau(H') = r-1",
        gamma_h == target && gamma_hs == target && tau_hs == target && tau_hp == target, chain);

    if (!trace.hprime) {
        rep.trace = std::move(trace);
        for (const char* id : {"hprime.quasidegree", "hprime.degree2_per_edge", "hprime.max_degree", "hprime.edge_count",
                               "hprime.vertex_count", "hprime.edge_identity", "hprime.gamma"}) {
            unavailable(id, id);
        }
        if (r == 4) unavailable("hprime.fano", "hprime.fano");
        return rep;
    }

    const Hypergraph& hp = *trace.hprime;
    const DegreeProfile pp = degree_profile(hp);

    json qd = json::array();
    bool qd_ok = true;
    for (VertexId v = 1; v <= hp.num_vertices(); ++v) {
        const int q = quasidegree(hp, v).value;
        qd.push_back(q);
        qd_ok = qd_ok && q >= 2 && q <= target;
    }
    add("hprime.quasidegree", "2 <= qd(v) <= r-1 for every vertex of H'", qd_ok, {{"qd", qd}});

    json deg2 = json::array();
    bool deg2_ok = true;
    for (Edge e : hp.edges()) {
        int count = 0;
        e.for_each([&](VertexId v) { count += pp.degree[v - 1] == 2; });
        deg2.push_back(count);
        deg2_ok = deg2_ok && count <= 1;
    }
    add("hprime.degree2_per_edge", "every edge of H' has at most one degree-2 vertex", deg2_ok,
        {{"degree2_per_edge", deg2}});
    add("hprime.max_degree", "max degree of H' is r-1", pp.max == target, {{"max_degree", pp.max}, {"expected", target}});

    const int plane = target * target - target + 1;
    const int m_hp = hp.num_edges();
    add("hprime.edge_count", "3(r-2) <= |E(H')| <= (r-1)^2-(r-1)+1", m_hp >= 3 * (r - 2) && m_hp <= plane,
        {{"edges", m_hp}, {"lower", 3 * (r - 2)}, {"upper", plane}});
    add("hprime.vertex_count", "n(H') = (r-1)^2-(r-1)+1", hp.num_vertices() == plane,
        {{"vertices", hp.num_vertices()}, {"expected", plane}});

    json sums = json::array();
    bool identity_ok = true;
    for (Edge e : hp.edges()) {
        int sum = 0;
        e.for_each([&](VertexId v) { sum += pp.degree[v - 1]; });
        sums.push_back(sum - (r - 2));
        identity_ok = identity_ok && m_hp == sum - (r - 2);
    }
    add("hprime.edge_identity", "|E(H')| = sum of degrees over e minus (r-2), for every edge e", identity_ok,
        {{"edges", m_hp}, {"per_edge", sums}});

    const int gamma_hp = domination_number(hp).value;
    add("hprime.gamma", "gamma(H') = 1", gamma_hp == 1, {{"gamma_hprime", gamma_hp}});

    if (r == 4) {
        std::string match = "none";
        if (is_isomorphic(hp, generate(ConstructionName::Fano).graph)) {
            match = "F";
        } else if (is_isomorphic(hp, generate(ConstructionName::FanoMinus).graph)) {
            match = "F-";
        }
        add("hprime.fano", "H' is isomorphic to F or F-", match != "none", {{"hprime_matches", match}});
    }

    rep.trace = std::move(trace);
    return rep;
}

json to_json(const ReductionTrace& t) {
    json out = {{"input", graph_json(t.input)},
                {"deleted_edges", edges_json(t.deleted_edges)},
                {"hstar", graph_json(t.hstar)}};
    if (t.hprime) {
        json pend = json::array();
        for (const auto& [e, v] : t.pendant_map) pend.push_back({{"edge", edge_json(e)}, {"pendant", v}});
        out["pendants"] = pend;
        out["dedup_count"] = t.dedup_count;
        out["hprime"] = graph_json(*t.hprime);
    }
    return out;
}

json to_json(const LemmaReport& report) {
    json clauses = json::array();
    for (const auto& c : report.clauses) {
        clauses.push_back({{"id", c.id}, {"statement", c.statement}, {"holds", c.holds}, {"details", c.details}});
    }
    json out = {{"r", report.r}, {"clauses", clauses}, {"all_hold", report.all_hold()}};
    if (report.trace) out["trace"] = to_json(*report.trace);
    if (report.pipeline_error) out["pipeline_error"] = *report.pipeline_error;
    return out;
}

}  // namespace hyperdom
