#include "hyperdom/iso.hpp"

#include <algorithm>
#include <sstream>

namespace hyperdom {

std::string CanonicalCode::to_string() const {
    std::ostringstream os;
    if (code.size() < 2) return "";
    os << code[0] << ':' << code[1];
    for (std::size_t i = 2; i < code.size();) {
        const int size = code[i++];
        os << '|';
        for (int j = 0; j < size; ++j) os << (j ? "." : "") << code[i++];
    }
    return os.str();
}

namespace {

using Colors = std::vector<int>;  // color per vertex, index v - 1

// Replaces each signature by its rank among the distinct signatures.
Colors rank_signatures(const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Colors out(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
        out[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());
    }
    return out;
}

int count_colors(const Colors& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

class Canonizer {
public:
    explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.num_vertices()) {
        for (VertexId v = 1; v <= n_; ++v) {
            std::vector<int> sizes;
            for (Edge e : h.edges()) {
                if (e.contains(v)) sizes.push_back(e.size());
            }
            std::sort(sizes.begin(), sizes.end());
            std::vector<int> sig{static_cast<int>(sizes.size())};
            sig.insert(sig.end(), sizes.begin(), sizes.end());
            initial_.push_back(std::move(sig));
        }
    }

    CanonicalForm run() {
        search(refine(rank_signatures(initial_)));
        return {CanonicalCode{best_code_}, best_labeling_};
    }

private:
    // Equitable-style refinement: a vertex's new color is its old color plus
    // the multiset of (size, colors of co-members) over its incident edges.
    Colors refine(Colors colors) const {
        int classes = count_colors(colors);
        while (true) {
            std::vector<std::vector<int>> sigs(n_);
            for (VertexId v = 1; v <= n_; ++v) {
                std::vector<std::vector<int>> incident;
                for (Edge e : h_.edges()) {
                    if (!e.contains(v)) continue;
                    std::vector<int> desc;
                    e.for_each([&](VertexId u) {
                        if (u != v) desc.push_back(colors[u - 1]);
                    });
                    std::sort(desc.begin(), desc.end());
                    desc.insert(desc.begin(), e.size());
                    incident.push_back(std::move(desc));
                }
                std::sort(incident.begin(), incident.end());
                auto& sig = sigs[v - 1];
                sig.push_back(colors[v - 1]);
                for (const auto& d : incident) {
                    sig.push_back(-1);
                    sig.insert(sig.end(), d.begin(), d.end());
                }
            }
            colors = rank_signatures(sigs);
            const int next = count_colors(colors);
            if (next == classes) return colors;
            classes = next;
        }
    }

    void search(const Colors& colors) {
        if (count_colors(colors) == n_) {
            leaf(colors);
            return;
        }
        // First smallest non-singleton cell.
        std::vector<int> cell_size(count_colors(colors), 0);
        for (int c : colors) ++cell_size[c];
        int target = -1;
        for (int c = 0; c < static_cast<int>(cell_size.size()); ++c) {
            if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
        }
        for (int v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            Colors split(n_);
            for (int u = 0; u < n_; ++u) split[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
            search(refine(rank_signatures(as_signatures(split))));
        }
    }

    static std::vector<std::vector<int>> as_signatures(const Colors& c) {
        std::vector<std::vector<int>> out;
        out.reserve(c.size());
        for (int x : c) out.push_back({x});
        return out;
    }

    void leaf(const Colors& colors) {
        Relabeling labeling(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) labeling[v + 1] = colors[v] + 1;
        std::vector<Edge> edges;
        for (Edge e : h_.edges()) edges.push_back(relabel(e, labeling));
        std::sort(edges.begin(), edges.end(), shortlex_less);
        std::vector<int> code{n_, h_.num_edges()};
        for (Edge e : edges) {
            code.push_back(e.size());
            e.for_each([&](VertexId v) { code.push_back(v); });
        }
        if (best_code_.empty() || code < best_code_) {
            best_code_ = std::move(code);
            best_labeling_ = std::move(labeling);
        }
    }

    const Hypergraph& h_;
    int n_;
    std::vector<std::vector<int>> initial_;
    std::vector<int> best_code_;
    Relabeling best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
    if (h.num_vertices() > kIsoMaxVertices) {
        throw Error(ErrorCode::TooLarge, "canonical form limited to " + std::to_string(kIsoMaxVertices) + " vertices");
    }
    if (h.num_vertices() == 0) return {CanonicalCode{{0, 0}}, Relabeling(1, 0)};
    return Canonizer(h).run();
}

Hypergraph apply_permutation(const Hypergraph& h, const Relabeling& perm) {
    std::vector<Edge> edges;
    for (Edge e : h.edges()) edges.push_back(relabel(e, perm));
    return Hypergraph(h.num_vertices(), std::move(edges));
}

std::optional<Relabeling> find_isomorphism(const Hypergraph& a, const Hypergraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
    {
        // Quick reject on cheap invariants.
        auto da = degree_profile(a).degree, db = degree_profile(b).degree;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) return std::nullopt;
        std::vector<int> sa, sb;
        for (Edge e : a.edges()) sa.push_back(e.size());
        for (Edge e : b.edges()) sb.push_back(e.size());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    const CanonicalForm ca = canonical_form(a);
    const CanonicalForm cb = canonical_form(b);
    if (ca.code != cb.code) return std::nullopt;

    const int n = a.num_vertices();
    Relabeling from_label(n + 1, 0);
    for (VertexId y = 1; y <= n; ++y) from_label[cb.labeling[y]] = y;
    Relabeling map(n + 1, 0);
    for (VertexId x = 1; x <= n; ++x) map[x] = from_label[ca.labeling[x]];
    if (apply_permutation(a, map) != b) {
        throw Error(ErrorCode::SemanticError, "canonical codes agree but the induced map is not an isomorphism");
    }
    return map;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace hyperdom
