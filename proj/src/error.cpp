#include "chordlab/error.hpp"

namespace chordlab {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::fixed_point_in_pairing:
            return "FixedPointInPairing";
        case ErrorCode::valence_too_low:
            return "ValenceTooLow";
        case ErrorCode::disconnected:
            return "Disconnected";
        case ErrorCode::inconsistent_tables:
            return "InconsistentTables";
        case ErrorCode::non_integer_genus:
            return "NonIntegerGenus";
        case ErrorCode::ghost_cycle:
            return "GhostCycle";
        case ErrorCode::circle_not_disjoint:
            return "CircleNotDisjoint";
        case ErrorCode::incoming_not_boundary_cycle:
            return "IncomingNotBoundaryCycle";
        case ErrorCode::no_circular_edge_on_cycle:
            return "NoCircularEdgeOnCycle";
        case ErrorCode::bad_marking:
            return "BadMarking";
        case ErrorCode::essential_edge:
            return "EssentialEdge";
        case ErrorCode::loop_edge:
            return "LoopEdge";
        case ErrorCode::unrepresentable_type:
            return "UnrepresentableType";
        case ErrorCode::arity_mismatch:
            return "ArityMismatch";
        case ErrorCode::invalid_schedule:
            return "InvalidSchedule";
        case ErrorCode::glue_validation_failed:
            return "GlueValidationFailed";
        case ErrorCode::bound_too_small:
            return "BoundTooSmall";
        case ErrorCode::search_exhausted:
            return "SearchExhausted";
        case ErrorCode::no_outgoing:
            return "NoOutgoing";
        case ErrorCode::field_mismatch:
            return "FieldMismatch";
        case ErrorCode::size_limit:
            return "SizeLimit";
        case ErrorCode::invalid_algebra:
            return "InvalidAlgebra";
        case ErrorCode::syntax_error:
            return "SyntaxError";
        case ErrorCode::validation_error:
            return "ValidationError";
        case ErrorCode::io_error:
            return "IoError";
        case ErrorCode::internal:
            return "Internal";
    }
    return "Unknown";
}

Error Error::wrap(const Error& inner, int line, int column) {
    Error out(ErrorCode::validation_error, std::string(error_code_name(inner.code())) + ": " + inner.what(), line,
              column);
    out.cause_ = inner.code();
    out.half_edge_ = inner.half_edge_;
    return out;
}

}  // namespace chordlab
