#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chartmark/ast.hpp"
#include "chartmark/diagnostics.hpp"
#include "chartmark/scalar.hpp"

namespace chartmark {

/// One chart row materialized from the parallel data arrays.
struct Row {
    std::size_t index = 0;
    Scalar x;
    double y = 0.0;
    std::optional<std::string> group;
};

std::vector<Row> chart_rows(const Chart& chart);

enum class CompareOp { eq, ne, lt, le, gt, ge };

const char* to_string(CompareOp op);

/// Filter literal as written: a number or a (quoted) string. Strings compare
/// as epoch days against temporal columns and as exact text against
/// categorical ones.
struct FilterLiteral {
    bool is_number = false;
    double number = 0.0;
    std::string text;
};

/// Expression tree for the data_items mini-language.
/// Precedence: not > and > or; parentheses group.
struct FilterExpr {
    using Ptr = std::shared_ptr<const FilterExpr>;

    enum class Kind { comparison, logical_and, logical_or, logical_not, always_true };

    Kind kind = Kind::always_true;

    // comparison
    std::string field; // as written; x/y/group or a declared column name
    CompareOp op = CompareOp::eq;
    FilterLiteral literal;

    // logical_and / logical_or children; logical_not has exactly one
    std::vector<Ptr> children;

    static Ptr make_true();
    static Ptr make_comparison(std::string field, CompareOp op, FilterLiteral literal);
    static Ptr make_and(std::vector<Ptr> children);
    static Ptr make_or(std::vector<Ptr> children);
    static Ptr make_not(Ptr child);
};

/// Normalized source form; nested logicals are parenthesized.
std::string to_string(const FilterExpr& expr);

struct FilterParseResult {
    FilterExpr::Ptr expr; // null on syntax error
    Diagnostics errors;

    bool ok() const { return expr != nullptr && errors.empty(); }
};

/// Parses the concrete filter syntax. Errors carry FILTER_SYNTAX with a
/// 1-based column. Pure; no chart context needed.
FilterParseResult parse_filter(const std::string& src);

/// Checks field names and comparator/literal types against the chart's
/// columns without evaluating. `path` prefixes diagnostic locations.
Diagnostics validate_filter(const FilterExpr& expr, const Chart& chart, const std::string& path);

struct FilterEvalResult {
    std::vector<Row> rows;
    Diagnostics errors;

    bool ok() const { return errors.empty(); }
};

/// Rows for which the predicate holds, in ascending index order.
FilterEvalResult eval_filter(const FilterExpr& expr, const Chart& chart);

} // namespace chartmark
