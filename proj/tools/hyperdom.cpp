// hyperdom: command-line front end for the hypergraph domination toolkit.
//
// Exit codes: 0 all checks pass, 1 a verification clause failed, 2 usage or
// I/O error.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyperdom/constructions.hpp"
#include "hyperdom/harness.hpp"
#include "hyperdom/io.hpp"
#include "hyperdom/iso.hpp"
#include "hyperdom/reductions.hpp"
#include "hyperdom/solvers.hpp"

namespace {

using hyperdom::Hypergraph;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Output {
    bool as_json = false;
    bool timing = true;
};

int emit(const hyperdom::VerificationReport& rep, const Output& out) {
    if (out.as_json) {
        std::cout << rep.to_json(out.timing).dump(2) << '\n';
    } else {
        std::cout << rep.to_text(out.timing);
    }
    return rep.passed() ? kExitPass : kExitFail;
}

int cmd_inv(const std::string& input, const Output& out) {
    const Hypergraph h = hyperdom::load_input(input);
    json j = {{"n", h.num_vertices()}, {"m", h.num_edges()}};
    if (h.num_edges() > 0) {
        const int r = hyperdom::rank(h);
        j["rank"] = r;
        j["uniform"] = hyperdom::is_uniform(h, r);
        j["tau"] = hyperdom::transversal_number(h).value;
        j["alpha"] = hyperdom::matching_number(h).value;
    }
    j["linear"] = hyperdom::is_linear(h);
    j["intersecting"] = hyperdom::is_intersecting(h);
    if (h.num_vertices() > 0) {
        const auto gamma = hyperdom::domination_number(h);
        j["gamma"] = gamma.value;
        j["dominating_set"] = gamma.vertices.members();
    }
    json qd = json::array();
    json deg = json::array();
    for (int v = 1; v <= h.num_vertices(); ++v) {
        qd.push_back(hyperdom::quasidegree(h, v).value);
        deg.push_back(hyperdom::degree(h, v));
    }
    j["degree"] = deg;
    j["qd"] = qd;

    if (out.as_json) {
        std::cout << j.dump(2) << '\n';
        return kExitPass;
    }
    auto yes_no = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
    std::cout << "n: " << j["n"] << "\nm: " << j["m"] << '\n';
    if (j.contains("rank")) std::cout << "rank: " << j["rank"] << "\nuniform: " << yes_no(j["uniform"]) << '\n';
    std::cout << "linear: " << yes_no(j["linear"]) << "\nintersecting: " << yes_no(j["intersecting"]) << '\n';
    if (j.contains("gamma")) std::cout << "gamma: " << j["gamma"] << "  " << j["dominating_set"].dump() << '\n';
    if (j.contains("tau")) std::cout << "tau: " << j["tau"] << "\nalpha': " << j["alpha"] << '\n';
    for (int v = 1; v <= h.num_vertices(); ++v) {
        std::cout << "vertex " << v << ": degree " << deg[v - 1] << ", qd " << qd[v - 1] << '\n';
    }
    return kExitPass;
}

int cmd_reduce(const std::string& input, const Output& out) {
    const Hypergraph h = hyperdom::load_input(input);
    hyperdom::ReductionTrace trace = hyperdom::peel_to_hstar(h);
    std::string error;
    try {
        trace = hyperdom::shrink_to_hprime(std::move(trace));
    } catch (const hyperdom::Error& e) {
        error = e.what();
    }
    json j = hyperdom::to_json(trace);
    if (!error.empty()) j["shrink_error"] = error;
    if (out.as_json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "deleted edges (in order): " << j["deleted_edges"].dump() << '\n';
        std::cout << "H*:\n" << hyperdom::write(trace.hstar);
        if (trace.hprime) {
            std::cout << "pendants: ";
            for (const auto& [e, v] : trace.pendant_map) std::cout << e.to_string() << "->" << v << ' ';
            std::cout << "\nmerged duplicates: " << trace.dedup_count << "\nH':\n" << hyperdom::write(*trace.hprime);
        } else {
            std::cout << "H' undefined: " << error << '\n';
        }
    }
    return trace.hprime ? kExitPass : kExitFail;
}

int cmd_iso(const std::string& a_in, const std::string& b_in, const Output& out) {
    const Hypergraph a = hyperdom::load_input(a_in);
    const Hypergraph b = hyperdom::load_input(b_in);
    const auto map = hyperdom::find_isomorphism(a, b);
    json j = {{"isomorphic", map.has_value()},
              {"code_a", hyperdom::canonical_form(a).code.to_string()},
              {"code_b", hyperdom::canonical_form(b).code.to_string()}};
    if (map) j["mapping"] = json(std::vector<int>(map->begin() + 1, map->end()));
    if (out.as_json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (map ? "isomorphic" : "not isomorphic") << '\n';
        if (map) std::cout << "mapping (a -> b): " << j["mapping"].dump() << '\n';
    }
    return map ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergraph domination toolkit and verification harness"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Omit timing from reports");

    std::string gen_name, gen_file;
    auto* gen = app.add_subcommand("gen", "Write a named construction (F, F-, F1, F1-, F2, F3)");
    gen->add_option("name", gen_name)->required();
    gen->add_option("-o,--output", gen_file, "Output file (default stdout)");

    std::string input, input_b;
    auto* inv = app.add_subcommand("inv", "Print structural facts and invariants");
    inv->add_option("input", input, "File or construction name")->required();
    auto* reduce = app.add_subcommand("reduce", "Print the peel trace, H* and H'");
    reduce->add_option("input", input, "File or construction name")->required();
    auto* iso = app.add_subcommand("iso", "Test two hypergraphs for isomorphism");
    iso->add_option("a", input)->required();
    iso->add_option("b", input_b)->required();

    int lemma_rank = 0;
    auto* lemmas = app.add_subcommand("check-lemmas", "Evaluate the reduction lemmas on an input");
    lemmas->add_option("input", input, "File or construction name")->required();
    lemmas->add_option("-r,--rank", lemma_rank, "Rank r (default: rank of the input)");

    hyperdom::ExtensionOptions ext;
    auto* theorem = app.add_subcommand("verify-theorem", "Check the rank-4 characterization in both directions");
    theorem->add_option("--max-added", ext.max_added, "Edges added per extension candidate")->check(CLI::PositiveNumber);
    theorem->add_option("--budget", ext.budget, "Cap on candidates examined");

    int bound_rank = 4;
    int trials = hyperdom::kDefaultTrials;
    std::uint64_t seed = hyperdom::kDefaultSeed;
    auto* bound = app.add_subcommand("verify-bound", "Random check of gamma <= (r-1) alpha'");
    bound->add_option("-r,--rank", bound_rank)->check(CLI::Range(2, 5));
    bound->add_option("-t,--trials", trials)->check(CLI::PositiveNumber);
    bound->add_option("--seed", seed);

    hyperdom::VerifyAllOptions all;
    auto* verify_all = app.add_subcommand("verify-all", "Run every harness");
    verify_all->add_option("--seed", all.seed);
    verify_all->add_option("-t,--trials", all.trials)->check(CLI::PositiveNumber);
    verify_all->add_option("--max-added", all.extension.max_added)->check(CLI::PositiveNumber);
    verify_all->add_option("--budget", all.extension.budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }
    out.as_json = format == "json";
    out.timing = !no_timing;

    try {
        if (gen->parsed()) {
            const Hypergraph h = hyperdom::generate(hyperdom::parse_construction_name(gen_name)).graph;
            if (gen_file.empty()) {
                std::cout << hyperdom::write(h);
            } else {
                hyperdom::write_file(gen_file, h);
            }
            return kExitPass;
        }
        if (inv->parsed()) return cmd_inv(input, out);
        if (reduce->parsed()) return cmd_reduce(input, out);
        if (iso->parsed()) return cmd_iso(input, input_b, out);
        if (lemmas->parsed()) {
            const Hypergraph h = hyperdom::load_input(input);
            const int r = lemma_rank > 0 ? lemma_rank : hyperdom::rank(h);
            return emit(hyperdom::check_lemmas(h, input, r), out);
        }
        if (theorem->parsed()) {
            ext.threads = hyperdom::worker_count_from_env();
            return emit(hyperdom::verify_theorem(ext), out);
        }
        if (bound->parsed()) return emit(hyperdom::verify_bound(bound_rank, trials, seed), out);
        if (verify_all->parsed()) {
            all.extension.threads = hyperdom::worker_count_from_env();
            return emit(hyperdom::verify_all(all), out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
