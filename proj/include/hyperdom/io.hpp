#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperdom/hypergraph.hpp"

namespace hyperdom {

/// Text format:
///
///     # comment lines start with '#'
///     n m
///     v1 v2 ...      (m lines, 1-based ids, strictly increasing)
///
/// Every line, including the last, ends in '\n'. Blank lines are ignored.
/// Throws SyntaxError (with line:column) for malformed text and SemanticError
/// when the hypergraph itself is invalid.
Hypergraph parse(std::string_view text);

/// Canonical rendering; parse(write(h)) == h and write(parse(t)) == t for
/// canonical t.
std::string write(const Hypergraph& h);

Hypergraph read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Hypergraph& h);

/// A construction name ("F", "F1-", ...) or a path to a hypergraph file.
Hypergraph load_input(const std::string& name_or_path);

}  // namespace hyperdom
