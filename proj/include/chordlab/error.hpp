#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordlab {

enum class ErrorCode {
    // fat graph tables
    fixed_point_in_pairing,
    valence_too_low,
    disconnected,
    inconsistent_tables,
    non_integer_genus,
    // chord diagrams
    ghost_cycle,
    circle_not_disjoint,
    incoming_not_boundary_cycle,
    no_circular_edge_on_cycle,
    bad_marking,
    essential_edge,
    loop_edge,
    unrepresentable_type,
    arity_mismatch,
    invalid_schedule,
    glue_validation_failed,
    // move graph search
    bound_too_small,
    search_exhausted,
    // algebra
    no_outgoing,
    field_mismatch,
    size_limit,
    invalid_algebra,
    // documents
    syntax_error,
    validation_error,
    io_error,
    internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every domain failure in the library is reported as a chordlab::Error.
/// `line` and `column` are 1-based and zero when the error has no source
/// location.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code), cause_(code) {}
    Error(ErrorCode code, const std::string& message, int line, int column)
        : std::runtime_error(message), code_(code), cause_(code), line_(line), column_(column) {}

    ErrorCode code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

    /// Code that caused a validation_error, or code() otherwise.
    ErrorCode cause() const noexcept { return cause_; }

    /// Half-edge the failure is anchored at, or -1. Document parsers use it
    /// to point at the offending record.
    int half_edge() const noexcept { return half_edge_; }
    Error& at_half_edge(int h) noexcept {
        half_edge_ = h;
        return *this;
    }

    /// Wraps a module error as a validation_error at a document location.
    static Error wrap(const Error& inner, int line, int column);

private:
    ErrorCode code_;
    ErrorCode cause_;
    int line_ = 0;
    int column_ = 0;
    int half_edge_ = -1;
};

}  // namespace chordlab
