#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdom {

enum class ErrorCode {
    EdgeTooSmall,
    DuplicateEdge,
    BadVertexId,
    EmptyHypergraph,
    UnknownEdge,
    VertexNotInEdge,
    EdgeTooSmallAfterShrink,
    DuplicateEdgeAfterShrink,
    TooLarge,
    MultiplePendants,
    NoPendant,
    UnknownName,
    Infeasible,
    SyntaxError,
    SemanticError,
    BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception; `code()` is the
/// stable, machine-checkable part, `what()` carries the human detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hyperdom
