#include "hyperdom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "hyperdom/iso.hpp"
#include "hyperdom/reductions.hpp"
#include "hyperdom/solvers.hpp"

namespace hyperdom {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json edges_json(std::span<const Edge> edges) {
    json out = json::array();
    for (Edge e : edges) out.push_back(e.members());
    return out;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

}  // namespace

int worker_count_from_env() {
    const char* env = std::getenv("HYPERDOM_THREADS");
    int requested = 0;
    if (env != nullptr) requested = std::atoi(env);
    if (requested > 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

VerificationReport check_lemmas(const Hypergraph& h, const std::string& label, int r) {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "check-lemmas";
    rep.inputs = {{"input", label}, {"r", r}};
    const LemmaReport lr = reduction_report(h, r);
    for (const LemmaClause& c : lr.clauses) {
        json details = c.details;
        details["statement"] = c.statement;
        rep.add(c.id, c.holds, details);
    }
    if (lr.trace) rep.findings["trace"] = to_json(*lr.trace);
    if (lr.pipeline_error) rep.findings["pipeline_error"] = *lr.pipeline_error;
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport check_peel_orders(const Hypergraph& h, const std::string& label, int r,
                                     const std::string& expected_hprime) {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "check-peel-orders";
    rep.inputs = {{"input", label}, {"r", r}, {"expected_hprime", expected_hprime}};
    const PeelEnumeration all = enumerate_peel_outcomes(h);
    const Hypergraph fano = generate(ConstructionName::Fano).graph;
    const Hypergraph fano_minus = generate(ConstructionName::FanoMinus).graph;
    const int gamma_h = domination_number(h).value;

    json outcomes = json::array();
    bool pendants_ok = true, uniform_ok = true, chain_ok = true, fano_ok = true;
    for (const PeelOutcome& o : all.outcomes) {
        json entry = {{"order", edges_json(o.order)}};
        const DegreeProfile p = degree_profile(o.hstar);
        bool one_each = true;
        for (Edge e : o.hstar.edges()) {
            int c = 0;
            e.for_each([&](VertexId v) { c += p.degree[v - 1] == 1; });
            one_each = one_each && c == 1;
        }
        const bool uniform = is_uniform(o.hstar, r);
        pendants_ok = pendants_ok && one_each;
        uniform_ok = uniform_ok && uniform;
        entry["one_pendant_per_edge"] = one_each;
        entry["uniform"] = uniform;

        const int gamma_hs = domination_number(o.hstar).value;
        const int tau_hs = transversal_number(o.hstar).value;
        std::string match = "none";
        std::optional<int> tau_hp;
        try {
            ReductionTrace t;
            t.input = h;
            t.deleted_edges = o.order;
            t.hstar = o.hstar;
            t = shrink_to_hprime(std::move(t));
            tau_hp = transversal_number(*t.hprime).value;
            if (is_isomorphic(*t.hprime, fano)) {
                match = "F";
            } else if (is_isomorphic(*t.hprime, fano_minus)) {
                match = "F-";
            }
        } catch (const Error& e) {
            entry["shrink_error"] = e.what();
        }
        const bool chain = gamma_h == r - 1 && gamma_hs == r - 1 && tau_hs == r - 1 && tau_hp == r - 1;
        chain_ok = chain_ok && chain;
        fano_ok = fano_ok && match != "none" && (expected_hprime.empty() || match == expected_hprime);
        entry["chain"] = {{"gamma_h", gamma_h}, {"gamma_hstar", gamma_hs}, {"tau_hstar", tau_hs},
                          {"tau_hprime", tau_hp ? json(*tau_hp) : json(nullptr)}};
        entry["hprime_matches"] = match;
        outcomes.push_back(entry);
    }
    const json summary = {{"order_count", all.order_count}, {"distinct_hstar", all.outcomes.size()}};
    rep.add("one_pendant_per_edge", pendants_ok, summary);
    rep.add("hstar_uniform", uniform_ok, summary);
    rep.add("equality_chain", chain_ok, summary);
    rep.add("hprime_fano", fano_ok, summary);
    rep.findings["outcomes"] = outcomes;
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_theorem_forward() {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "verify-theorem-forward";
    for (const NamedConstruction& c : family_L()) {
        const std::string name(to_string(c.name));
        const Hypergraph& h = c.graph;
        rep.add(name + ".linear", is_linear(h));
        rep.add(name + ".intersecting", is_intersecting(h));
        rep.add(name + ".rank4", rank(h) == 4, {{"rank", rank(h)}});
        const InvariantWitness gamma = domination_number(h);
        rep.add(name + ".gamma3", gamma.value == 3 && certificate_valid(h, gamma),
                {{"gamma", gamma.value}, {"certificate", gamma.vertices.members()}});
        const InvariantWitness alpha = matching_number(h);
        rep.add(name + ".alpha1", alpha.value == 1, {{"alpha", alpha.value}});

        // e - {v} dominates for each 4-edge e with degree-1 vertex v.
        const DegreeProfile p = degree_profile(h);
        int checked = 0, without_pendant = 0;
        bool all_dominate = true;
        json failures = json::array();
        for (Edge e : h.edges()) {
            if (e.size() != 4) continue;
            std::vector<VertexId> pendants;
            e.for_each([&](VertexId v) {
                if (p.degree[v - 1] == 1) pendants.push_back(v);
            });
            if (pendants.size() != 1) {
                ++without_pendant;
                continue;
            }
            ++checked;
            InvariantWitness w{InvariantKind::Domination, 3, e - VertexSet{pendants.front()}, {}, 0};
            if (!certificate_valid(h, w)) {
                all_dominate = false;
                failures.push_back(e.members());
            }
        }
        rep.add(name + ".edge_minus_pendant_dominates", all_dominate && checked > 0,
                {{"edges_checked", checked}, {"edges_without_single_pendant", without_pendant}, {"failures", failures}});
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport extension_search(ConstructionName base_name, const ExtensionOptions& options) {
    if (base_name != ConstructionName::F1 && base_name != ConstructionName::F1Minus) {
        throw Error(ErrorCode::UnknownName, "extension search base must be F1 or F1-");
    }
    if (options.max_added < 1) throw Error(ErrorCode::Infeasible, "max_added must be at least 1");
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "extension-search";
    rep.inputs = {{"base", std::string(to_string(base_name))}, {"max_added", options.max_added}, {"budget", options.budget}};

    const NamedConstruction base = generate(base_name);
    const Hypergraph& b = base.graph;
    const int n = b.num_vertices();
    std::uint64_t examined = 0;
    auto spend = [&] {
        if (++examined > options.budget) {
            throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(options.budget) + " candidates");
        }
    };

    // New edges must meet every base edge in exactly one vertex: at least one
    // to stay intersecting, at most one to stay linear.
    std::vector<Edge> pool;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const Edge e(bits);
        if (e.size() < 2 || e.size() > 4) continue;
        spend();
        if (b.has_edge(e)) continue;
        bool ok = true;
        for (Edge f : b.edges()) ok = ok && (e & f).size() == 1;
        if (ok) pool.push_back(e);
    }
    std::sort(pool.begin(), pool.end(), shortlex_less);

    // Added-edge sets, pairwise meeting in exactly one vertex.
    std::vector<std::vector<Edge>> sets;
    std::vector<Edge> current;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t i = from; i < pool.size(); ++i) {
            bool ok = true;
            for (Edge e : current) ok = ok && (e & pool[i]).size() == 1;
            if (!ok) continue;
            spend();
            current.push_back(pool[i]);
            sets.push_back(current);
            if (static_cast<int>(current.size()) < options.max_added) self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);

    struct Candidate {
        std::vector<Edge> added;
        int gamma = 0;
        CanonicalCode code;
    };
    std::vector<Candidate> candidates(sets.size());
    parallel_for(sets.size(), options.threads, [&](std::size_t i) {
        std::vector<Edge> edges(b.edges().begin(), b.edges().end());
        edges.insert(edges.end(), sets[i].begin(), sets[i].end());
        const Hypergraph h(n, std::move(edges));
        candidates[i] = {sets[i], domination_number(h).value, canonical_form(h).code};
    });

    const CanonicalCode f2 = canonical_form(generate(ConstructionName::F2).graph).code;
    const CanonicalCode f3 = canonical_form(generate(ConstructionName::F3).graph).code;
    std::map<CanonicalCode, std::string> members;
    for (const auto& c : family_L()) members.emplace(canonical_form(c.graph).code, std::string(to_string(c.name)));

    struct ClassInfo {
        std::size_t added = 0;
        int gamma = 0;
        int count = 0;
        std::vector<Edge> example;
    };
    std::map<std::pair<std::size_t, CanonicalCode>, ClassInfo> classes;
    for (const Candidate& c : candidates) {
        ClassInfo& info = classes[{c.added.size(), c.code}];
        if (info.count++ == 0) info = {c.added.size(), c.gamma, 1, c.added};
    }

    json class_list = json::array();
    std::set<CanonicalCode> single_gamma3;
    bool all_gamma3_in_l = true, single_others_low = true;
    std::map<int, int> gamma_histogram;
    for (const auto& [key, info] : classes) {
        const auto it = members.find(key.second);
        const std::string member = it == members.end() ? "" : it->second;
        class_list.push_back({{"added_edges", info.added},
                              {"gamma", info.gamma},
                              {"count", info.count},
                              {"code", key.second.to_string()},
                              {"member_of_L", member},
                              {"example", edges_json(info.example)}});
        gamma_histogram[info.gamma] += info.count;
        if (info.gamma == 3) {
            all_gamma3_in_l = all_gamma3_in_l && !member.empty();
            if (info.added == 1) single_gamma3.insert(key.second);
        }
        if (info.added == 1 && key.second != f2 && key.second != f3) single_others_low = single_others_low && info.gamma <= 2;
    }
    json histogram = json::object();
    for (const auto& [g, count] : gamma_histogram) histogram[std::to_string(g)] = count;

    rep.findings = {{"examined", examined},
                    {"admissible_single_edges", pool.size()},
                    {"candidates", candidates.size()},
                    {"gamma_histogram", histogram},
                    {"classes", class_list}};

    if (base_name == ConstructionName::F1) {
        rep.add("no_admissible_edge", pool.empty(), {{"admissible_single_edges", pool.size()}});
    } else {
        const std::set<CanonicalCode> expected{f2, f3};
        json found = json::array();
        for (const auto& c : single_gamma3) found.push_back(members.count(c) ? members[c] : c.to_string());
        rep.add("single_edge_gamma3_classes_are_F2_F3", single_gamma3 == expected, {{"classes", found}});
        rep.add("other_single_edges_gamma_le_2", single_others_low);

        const VertexSet v3 = base.by_degree.size() > 3 ? base.by_degree[3] : VertexSet{};
        int through_v3 = 0;
        bool v3_drop = true;
        for (const Candidate& c : candidates) {
            if (c.added.size() != 1 || !c.added.front().intersects(v3)) continue;
            ++through_v3;
            v3_drop = v3_drop && c.gamma < 3;
        }
        rep.add("edges_through_degree3_vertex_gamma_lt_3", v3_drop, {{"candidates", through_v3}});
    }
    rep.add("all_gamma3_candidates_in_L", all_gamma3_in_l);
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_theorem(const ExtensionOptions& options) {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "verify-theorem";
    rep.inputs = {{"max_added", options.max_added}, {"budget", options.budget}};
    rep.absorb("forward", verify_theorem_forward());
    rep.absorb("extend-F1", extension_search(ConstructionName::F1, options));
    rep.absorb("extend-F1-", extension_search(ConstructionName::F1Minus, options));
    rep.elapsed_ms = clock.ms();
    return rep;
}

Hypergraph random_instance(int r, std::uint64_t seed, RandomShape* shape) {
    std::mt19937_64 rng(seed);
    auto below = [&rng](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };
    while (true) {
        const int n = r + below(13 - r);
        const int m_lo = std::max(2, (2 * n + r) / (r + 1));
        if (m_lo > 8) continue;
        const int m = m_lo + below(9 - m_lo);
        try {
            Hypergraph h = random_hypergraph(r, n, m, rng());
            if (shape) *shape = {n, m};
            return h;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Infeasible) throw;
        }
    }
}

VerificationReport verify_bound(int r, int trials, std::uint64_t seed) {
    if (r < 2 || r > 5) throw Error(ErrorCode::Infeasible, "rank must be in [2, 5]");
    if (trials < 1) throw Error(ErrorCode::Infeasible, "trials must be at least 1");
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "verify-bound";
    rep.inputs = {{"r", r}, {"trials", trials}, {"seed", seed}};

    std::mt19937_64 seeds(seed);
    int bound_ok = 0, chain_ok = 0, tight = 0;
    json violations = json::array();
    for (int t = 0; t < trials; ++t) {
        const Hypergraph h = random_instance(r, seeds());
        const int gamma = domination_number(h).value;
        const int alpha = matching_number(h).value;
        const int tau = transversal_number(h).value;
        if (gamma <= (r - 1) * alpha) {
            ++bound_ok;
        } else {
            violations.push_back({{"trial", t}, {"gamma", gamma}, {"alpha", alpha}, {"edges", edges_json(h.edges())}});
        }
        tight += gamma == (r - 1) * alpha;
        chain_ok += gamma <= alpha && alpha <= tau;
    }
    rep.add("gamma_le_(r-1)alpha", bound_ok == trials, {{"held", bound_ok}, {"trials", trials}});
    if (r == 2) rep.add("graph_gamma_le_alpha_le_tau", chain_ok == trials, {{"held", chain_ok}, {"trials", trials}});

    const Hypergraph f1 = generate(ConstructionName::F1).graph;
    const int gamma_f1 = domination_number(f1).value;
    const int alpha_f1 = matching_number(f1).value;
    rep.add("sharpness_F1", gamma_f1 == 3 * alpha_f1 && gamma_f1 == 3, {{"gamma", gamma_f1}, {"alpha", alpha_f1}});
    rep.findings = {{"tight_instances", tight}, {"violations", violations}};
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport audit_f3() {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "audit-f3";
    const auto candidates = enumerate_f3_candidates();
    const Hypergraph f3 = generate(ConstructionName::F3).graph;
    const Hypergraph base = generate(ConstructionName::F1Minus).graph;
    bool all_iso = true, all_gamma3 = true;
    json added = json::array();
    for (const Hypergraph& h : candidates) {
        all_iso = all_iso && is_isomorphic(h, f3);
        all_gamma3 = all_gamma3 && domination_number(h).value == 3;
        for (Edge e : h.edges()) {
            if (!base.has_edge(e)) added.push_back(e.members());
        }
    }
    rep.add("non_empty", !candidates.empty(), {{"candidates", candidates.size()}});
    rep.add("pairwise_isomorphic", all_iso);
    rep.add("gamma3", all_gamma3);
    rep.findings["added_edges"] = added;
    rep.elapsed_ms = clock.ms();
    return rep;
}

VerificationReport verify_all(const VerifyAllOptions& options) {
    Stopwatch clock;
    VerificationReport rep;
    rep.command = "verify-all";
    rep.inputs = {{"seed", options.seed},
                  {"trials", options.trials},
                  {"max_added", options.extension.max_added},
                  {"budget", options.extension.budget}};
    rep.absorb("forward", verify_theorem_forward());
    rep.absorb("extend-F1", extension_search(ConstructionName::F1, options.extension));
    rep.absorb("extend-F1-", extension_search(ConstructionName::F1Minus, options.extension));
    for (const NamedConstruction& c : family_L()) {
        const std::string name(to_string(c.name));
        rep.absorb("lemmas-" + name, check_lemmas(c.graph, name, 4));
        rep.absorb("peel-orders-" + name, check_peel_orders(c.graph, name, 4, c.name == ConstructionName::F1 ? "F" : "F-"));
    }
    rep.absorb("f3-audit", audit_f3());
    for (int r : {2, 3, 4}) rep.absorb("bound-r" + std::to_string(r), verify_bound(r, options.trials, options.seed));
    rep.elapsed_ms = clock.ms();
    return rep;
}

}  // namespace hyperdom
