#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chartmark {

enum class Severity { error, warning };

/// One validation, parse, resolution, or lowering finding. `path` is a JSON
/// pointer into the source document ("" when no document location applies).
struct Diagnostic {
    std::string code;
    std::string path;
    std::string message;
    Severity severity = Severity::error;
    std::optional<int> line;
    std::optional<int> column;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::error) return true;
    return false;
}

inline Diagnostic make_error(std::string code, std::string path, std::string message) {
    return Diagnostic{std::move(code), std::move(path), std::move(message), Severity::error, {}, {}};
}

inline Diagnostic make_warning(std::string code, std::string path, std::string message) {
    return Diagnostic{std::move(code), std::move(path), std::move(message), Severity::warning, {}, {}};
}

/// Stable diagnostic codes. Grouped by the stage that emits them.
namespace codes {

// parser
inline constexpr char MALFORMED_JSON[] = "MALFORMED_JSON";
inline constexpr char MISSING_FIELD[] = "MISSING_FIELD";
inline constexpr char WRONG_TYPE[] = "WRONG_TYPE";
inline constexpr char UNKNOWN_ENUM[] = "UNKNOWN_ENUM";
inline constexpr char UNKNOWN_FIELD[] = "UNKNOWN_FIELD";

// document validation
inline constexpr char DUPLICATE_ID[] = "DUPLICATE_ID";
inline constexpr char EMPTY_ID[] = "EMPTY_ID";
inline constexpr char EMPTY_OPERATIONS[] = "EMPTY_OPERATIONS";
inline constexpr char LENGTH_MISMATCH[] = "LENGTH_MISMATCH";
inline constexpr char UNKNOWN_SUBTYPE[] = "UNKNOWN_SUBTYPE";
inline constexpr char PIE_NEGATIVE_VALUE[] = "PIE_NEGATIVE_VALUE";
inline constexpr char GROUP_DATA_REQUIRED[] = "GROUP_DATA_REQUIRED";
inline constexpr char VALUE_UNIT_CONFLICT[] = "VALUE_UNIT_CONFLICT";
inline constexpr char SOURCE_NONE_NONEMPTY[] = "SOURCE_NONE_NONEMPTY";
inline constexpr char SOURCE_TASK_MISMATCH[] = "SOURCE_TASK_MISMATCH";
inline constexpr char TARGET_PARAM_MISMATCH[] = "TARGET_PARAM_MISMATCH";
inline constexpr char TARGET_COORD_EMPTY[] = "TARGET_COORD_EMPTY";
inline constexpr char MARKER_OUT_OF_RANGE[] = "MARKER_OUT_OF_RANGE";
inline constexpr char MISSING_PAYLOAD[] = "MISSING_PAYLOAD";

// filter language
inline constexpr char FILTER_SYNTAX[] = "FILTER_SYNTAX";
inline constexpr char FILTER_UNKNOWN_FIELD[] = "FILTER_UNKNOWN_FIELD";
inline constexpr char FILTER_TYPE_MISMATCH[] = "FILTER_TYPE_MISMATCH";

// resolver
inline constexpr char DANGLING_REF[] = "DANGLING_REF";
inline constexpr char CYCLIC_REF[] = "CYCLIC_REF";
inline constexpr char RESOLVE_EMPTY_SELECTION[] = "RESOLVE_EMPTY_SELECTION";
inline constexpr char SUMMARY_SUBTYPE_DEFAULTED[] = "SUMMARY_SUBTYPE_DEFAULTED";
inline constexpr char TREND_DEGENERATE[] = "TREND_DEGENERATE";
inline constexpr char TREND_TOO_FEW_POINTS[] = "TREND_TOO_FEW_POINTS";

// backend
inline constexpr char UNSUPPORTED_OP_FOR_CHART[] = "UNSUPPORTED_OP_FOR_CHART";
inline constexpr char UNSUPPORTED_TARGET_FOR_OP[] = "UNSUPPORTED_TARGET_FOR_OP";
inline constexpr char UNSUPPORTED_CHART_TYPE[] = "UNSUPPORTED_CHART_TYPE";
inline constexpr char INVALID_CONFIG[] = "INVALID_CONFIG";
inline constexpr char BACKEND_DUPLICATE[] = "BACKEND_DUPLICATE";
inline constexpr char BACKEND_UNKNOWN[] = "BACKEND_UNKNOWN";

// extension registry
inline constexpr char EXT_DUPLICATE[] = "EXT_DUPLICATE";
inline constexpr char EXT_MISSING_LOWERING[] = "EXT_MISSING_LOWERING";

} // namespace codes

} // namespace chartmark
