#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chartmark/ast.hpp"
#include "chartmark/diagnostics.hpp"
#include "chartmark/filter.hpp"

namespace chartmark {

class Registry;

enum class AggregateKind { mean, max, min };

const char* to_string(AggregateKind kind);

/// Ordinary-least-squares fit over one group's rows, with segment endpoints
/// at the group's x extremes.
struct TrendLine {
    double slope = 0.0;     // y units per x unit (per epoch day on temporal axes)
    double intercept = 0.0; // y units
    Scalar x_start, x_end;
    double y_start = 0.0, y_end = 0.0;
};

struct DerivedResult {
    enum class Kind { mean, max, min, trend };
    Kind kind = Kind::mean;
    std::optional<double> scalar; // aggregates, in y units
    /// Trend lines keyed by group, in first-appearance order.
    std::vector<std::pair<std::string, TrendLine>> per_group;
};

/// Attachment point in chart-data space.
struct Anchor {
    Scalar x;
    double y = 0.0;
    std::optional<std::string> source_annotation;
};

struct ResolvedAnnotation {
    std::string id;
    Task task;
    DataSource source = DataSource::none;
    /// Union of data_items selections, ascending index, deduplicated.
    std::vector<Row> rows;
    std::optional<DerivedResult> derived;
    std::vector<ValueUnit> payload;
    /// One entry per operation: the rows its data_items target selected.
    std::vector<std::optional<std::vector<Row>>> op_rows;
    /// One entry per operation: the anchor its target resolves to.
    std::vector<std::optional<Anchor>> op_anchors;

    std::vector<Anchor> anchors() const {
        std::vector<Anchor> out;
        for (const auto& a : op_anchors)
            if (a) out.push_back(*a);
        return out;
    }
};

struct OrderResult {
    /// Indices into doc.annotations, referents before referrers, document
    /// order among unrelated annotations.
    std::vector<std::size_t> order;
    Diagnostics errors;

    bool ok() const { return errors.empty(); }
};

/// Topological order of the reference DAG induced by annotation targets.
/// Self-references are permitted and carry no edge. Cycles are reported with
/// the full path, e.g. [a, b, a].
OrderResult order_annotations(const AnnotatedChart& doc);

/// mean = sum(y)/n in index order; max/min over y. Plain IEEE doubles.
double compute_aggregate(AggregateKind kind, const std::vector<Row>& rows);

struct TrendResult {
    std::vector<std::pair<std::string, TrendLine>> per_group;
    Diagnostics errors;

    bool ok() const { return errors.empty(); }
};

/// Per-group OLS: slope = S_xy / S_xx, intercept = mean(y) - slope*mean(x).
/// Ungrouped rows fit as the single pseudo-group "". Temporal x is fitted in
/// epoch days.
TrendResult fit_trend(const std::vector<Row>& rows, bool grouped);

struct ResolveResult {
    std::optional<std::vector<ResolvedAnnotation>> annotations; // document order
    Diagnostics diagnostics; // errors and warnings

    bool ok() const { return annotations.has_value() && !has_errors(diagnostics); }
};

/// Evaluates every annotation's data in topological order: filters for
/// internal selections, aggregates and trend fits for derived data, payload
/// passthrough for external, and anchor geometry for every target.
ResolveResult resolve(const AnnotatedChart& doc, const Registry& registry);

} // namespace chartmark
