#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "hyperdom/io.hpp"

using namespace hyperdom;
using testing_support::named;
using testing_support::random_pool;

namespace {

ErrorCode parse_error(std::string_view text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error for: " << text);
    return ErrorCode::SemanticError;
}

}  // namespace

TEST_CASE("parse the Fano plane") {
    const auto h = parse("7 7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n");
    CHECK(h == named(ConstructionName::Fano));
}

TEST_CASE("parse a single edge") {
    CHECK(parse("2 1\n1 2\n") == Hypergraph::from_lists(2, {{1, 2}}));
}

TEST_CASE("comments and blank lines are ignored") {
    CHECK(parse("# a path\n3 2\n\n1 2\n# middle\n2 3\n") == Hypergraph::from_lists(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("syntax errors") {
    CHECK(parse_error("3 1\n1 1 2\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 1\n2 1\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 1\n1 2") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 2\n1 2\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 1\n1 2\n2 3\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3\n1 2\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 1\n1 x\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("3 1\n1 -2\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("") == ErrorCode::SyntaxError);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse("3 1\n1 1 2\n");
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("2:3") != std::string::npos);
    }
}

TEST_CASE("semantic errors come from core validation") {
    CHECK(parse_error("3 1\n1\n") == ErrorCode::SemanticError);
    CHECK(parse_error("3 1\n1 4\n") == ErrorCode::SemanticError);
    CHECK(parse_error("3 2\n1 2\n1 2\n") == ErrorCode::SemanticError);
}

TEST_CASE("write is canonical and parse inverts it") {
    CHECK(write(Hypergraph::from_lists(3, {{2, 3}, {1, 2, 3}, {1, 2}})) == "3 3\n1 2\n2 3\n1 2 3\n");
    CHECK(write(Hypergraph(4, {})) == "4 0\n");
    auto pool = random_pool(50, 31);
    for (const auto& c : family_L()) pool.push_back(c.graph);
    for (const auto& h : pool) {
        const std::string text = write(h);
        CHECK(parse(text) == h);
        CHECK(write(parse(text)) == text);
    }
}

TEST_CASE("file round trip and input resolution") {
    const auto dir = std::filesystem::temp_directory_path() / "hyperdom_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "f3.txt";
    write_file(path, named(ConstructionName::F3));
    CHECK(read_file(path) == named(ConstructionName::F3));
    CHECK(load_input(path.string()) == named(ConstructionName::F3));
    CHECK(load_input("F1-") == named(ConstructionName::F1Minus));
    CHECK_THROWS(load_input((dir / "missing.txt").string()));
    std::filesystem::remove_all(dir);
}
