#include "hyperdom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperdom/constructions.hpp"

namespace hyperdom {

namespace {

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

struct Token {
    long value;
    int column;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        long value = 0;
        const char* first = line.data() + start;
        const char* last = line.data() + i;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || value < 0) {
            syntax_error(line_no, static_cast<int>(start) + 1,
                         "expected a non-negative integer, got '" + std::string(first, last) + "'");
        }
        out.push_back({value, static_cast<int>(start) + 1});
    }
    return out;
}

}  // namespace

Hypergraph parse(std::string_view text) {
    if (!text.empty() && text.back() != '\n') {
        int lines = 1;
        for (char c : text) lines += c == '\n';
        syntax_error(lines, 1, "missing trailing newline");
    }

    long n = -1, m = -1;
    std::vector<std::vector<VertexId>> edges;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        const auto tokens = tokenize(line, line_no);
        if (tokens.empty()) continue;

        if (n < 0) {
            if (tokens.size() != 2) syntax_error(line_no, 1, "header must be 'n m'");
            n = tokens[0].value;
            m = tokens[1].value;
            if (n > kMaxVertices) syntax_error(line_no, tokens[0].column, "at most 64 vertices supported");
            continue;
        }
        if (static_cast<long>(edges.size()) == m) syntax_error(line_no, 1, "more edge lines than the header declares");
        std::vector<VertexId> edge;
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            if (k > 0 && tokens[k].value <= tokens[k - 1].value) {
                syntax_error(line_no, tokens[k].column,
                             tokens[k].value == tokens[k - 1].value ? "repeated vertex in edge"
                                                                    : "vertex ids must be strictly increasing");
            }
            if (tokens[k].value > kMaxVertices) syntax_error(line_no, tokens[k].column, "vertex id out of range");
            edge.push_back(static_cast<VertexId>(tokens[k].value));
        }
        edges.push_back(std::move(edge));
    }
    if (n < 0) syntax_error(line_no + 1, 1, "missing header 'n m'");
    if (static_cast<long>(edges.size()) != m) {
        syntax_error(line_no + 1, 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
    }
    try {
        return Hypergraph::from_lists(static_cast<int>(n), edges);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SemanticError) throw;
        throw Error(ErrorCode::SemanticError, e.what());
    }
}

std::string write(const Hypergraph& h) {
    std::ostringstream os;
    os << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (Edge e : h.edges()) {
        bool first = true;
        e.for_each([&](VertexId v) {
            os << (first ? "" : " ") << v;
            first = false;
        });
        os << '\n';
    }
    return os.str();
}

Hypergraph read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void write_file(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << write(h);
}

Hypergraph load_input(const std::string& name_or_path) {
    if (is_construction_name(name_or_path)) return generate(parse_construction_name(name_or_path)).graph;
    return read_file(name_or_path);
}

}  // namespace hyperdom
