#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chartmark/ast.hpp"
#include "chartmark/diagnostics.hpp"
#include "chartmark/filter.hpp"
#include "chartmark/resolver.hpp"

namespace chartmark {

class Registry;

/// Backend-neutral description of the unannotated chart.
struct BaseChartSpec {
    std::string title;
    std::string chart_type;
    std::string mark;   // bar | line | point | arc
    std::string x_type; // quantitative | temporal | nominal
    std::string x_name;
    std::string y_name;
    std::optional<std::string> group_name;
    std::vector<Row> data;
};

struct RuleGeometry {
    char axis = 'y'; // 'x' or 'y'
    Scalar value;    // y rules carry a number Scalar
};

struct RectGeometry {
    std::optional<Scalar> x, x2;
    std::optional<double> y, y2;
};

struct SegmentGeometry {
    Scalar x_start, x_end;
    double y_start = 0.0, y_end = 0.0;
    std::string group; // "" on ungrouped charts
};

struct TextGeometry {
    Scalar x;
    double y = 0.0;
    std::string content;
};

struct OverlayGeometry {
    FilterExpr::Ptr filter;
    std::string filter_text;
};

/// Conditional change to one base-encoding channel. The Vega-Lite emitter
/// folds these into the base layer instead of emitting a separate layer.
struct PatchGeometry {
    FilterExpr::Ptr filter;
    std::string filter_text;
    std::string channel; // color | opacity | stroke | strokeWidth
    nlohmann::json selected;
    nlohmann::json deselected; // may be JSON null (keep the backend default)
};

struct LegendGeometry {
    FilterExpr::Ptr filter;
    std::string filter_text;
    std::string label;
};

enum class LayerKind { rule, rect, line_segment, text, point_overlay, encoding_patch, legend_entry };

const char* to_string(LayerKind kind);

struct LayerOrigin {
    std::string annotation_id;
    std::size_t operation_index = 0;
};

struct RenderLayer {
    LayerOrigin origin;
    LayerKind kind = LayerKind::rule;
    std::variant<RuleGeometry, RectGeometry, SegmentGeometry, TextGeometry,
                 OverlayGeometry, PatchGeometry, LegendGeometry>
        geometry;
    /// Flattened marker values with the operation's defaults applied.
    std::map<std::string, nlohmann::json> style;
};

struct AxisConfig {
    std::optional<int> tick_count; // >= 2
    std::optional<bool> grid;
    std::optional<std::vector<double>> grid_dash;
};

struct RenderSpec {
    BaseChartSpec base;
    /// Annotation document order, then operation order within each annotation.
    std::vector<RenderLayer> layers;
    std::map<std::string, AxisConfig> axis_overrides; // keyed by element_id
};

struct LowerResult {
    std::optional<RenderSpec> spec;
    Diagnostics diagnostics;

    bool ok() const { return spec.has_value() && !has_errors(diagnostics); }
};

/// Applies one lowering rule per operation. Extension operations dispatch to
/// the rule registered for the "ir" surface.
LowerResult lower(const AnnotatedChart& doc, const std::vector<ResolvedAnnotation>& resolved,
                  const Registry& registry);

/// Canonical RenderSpec JSON; the oracle surface for structural tests.
std::string emit_ir(const RenderSpec& spec);

/// The RenderSpec as a JSON value (emit_ir is dump() of this).
nlohmann::json render_spec_to_json(const RenderSpec& spec);

/// Vega-Lite v5 layered spec, canonically serialized. encoding_patch layers
/// fold into the base encoding as conditions; everything else becomes one
/// Vega-Lite layer in order.
std::string emit_vegalite(const RenderSpec& spec);

/// Equals emit_vegalite(lower(doc with no annotations)).
std::string emit_base_chart(const Chart& chart, const Registry& registry);

/// Hook surface handed to extension lowering rules.
class LoweringContext {
public:
    LoweringContext(const Chart& chart, const ResolvedAnnotation& resolved,
                    std::size_t op_index, RenderSpec& spec, Diagnostics& diags)
        : chart_(chart), resolved_(resolved), op_index_(op_index), spec_(spec), diags_(diags) {}

    const Chart& chart() const { return chart_; }
    const ResolvedAnnotation& resolved() const { return resolved_; }
    std::size_t operation_index() const { return op_index_; }

    void emit_layer(LayerKind kind, RenderLayer layer);
    void push_layer(RenderLayer layer); // origin filled in by the context
    void set_axis_override(const std::string& element_id, AxisConfig config);
    void report(Diagnostic diagnostic) { diags_.push_back(std::move(diagnostic)); }

    /// Document path of the operation being lowered, for diagnostics.
    std::string op_path() const;

private:
    const Chart& chart_;
    const ResolvedAnnotation& resolved_;
    std::size_t op_index_;
    RenderSpec& spec_;
    Diagnostics& diags_;
};

/// Default styles applied when a Marker leaves a value unset. These are this
/// artifact's normative choices; golden files freeze them.
namespace defaults {
inline constexpr char REFERENCE_LINE_COLOR[] = "#808080";
inline constexpr double REFERENCE_LINE_WIDTH = 1.0;
inline constexpr char TREND_LINE_COLOR[] = "#666666";
inline constexpr double TREND_LINE_WIDTH = 1.5;
inline constexpr char SHADING_FILL[] = "#999999";
inline constexpr double SHADING_OPACITY = 0.15;
inline constexpr double TEXT_SIZE = 12.0;
inline constexpr char TEXT_ANCHOR[] = "start";
inline constexpr char TEXT_COLOR[] = "#000000";
inline constexpr char SYMBOL_SHAPE[] = "circle";
inline constexpr double SYMBOL_SIZE = 64.0;
inline constexpr char SYMBOL_COLOR[] = "#e45756";
inline constexpr char BOX_STROKE[] = "#e45756";
inline constexpr double BOX_STROKE_WIDTH = 1.0;
inline constexpr char HIGHLIGHT_COLOR[] = "#e45756";
inline constexpr char BASE_MARK_COLOR[] = "#4c78a8";
inline constexpr double FADE_OPACITY = 0.3;
} // namespace defaults

} // namespace chartmark
