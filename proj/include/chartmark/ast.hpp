#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "chartmark/diagnostics.hpp"
#include "chartmark/scalar.hpp"

namespace chartmark {

class Registry;

/// Core chart type vocabulary. Chart::type is an open string so extensions
/// can register further types; membership is checked against the registry.
namespace chart_types {
inline constexpr char BAR[] = "bar";
inline constexpr char GROUPED_BAR[] = "grouped_bar";
inline constexpr char LINE[] = "line";
inline constexpr char GROUPED_LINE[] = "grouped_line";
inline constexpr char SCATTER[] = "scatter";
inline constexpr char GROUPED_SCATTER[] = "grouped_scatter";
inline constexpr char PIE[] = "pie";
} // namespace chart_types

namespace task_types {
inline constexpr char REFERENCE[] = "reference";
inline constexpr char HIGHLIGHT[] = "highlight";
inline constexpr char DESCRIPTION[] = "description";
inline constexpr char SUMMARY[] = "summary";
inline constexpr char TREND[] = "trend";
inline constexpr char ENCODING[] = "encoding";
} // namespace task_types

/// Core operation vocabulary; extensions add names through the registry.
namespace op_names {
inline constexpr char SET_COLOR[] = "set_color";
inline constexpr char SET_OPACITY[] = "set_opacity";
inline constexpr char ADD_REFERENCE_LINE[] = "add_reference_line";
inline constexpr char ADD_BOUNDING_BOX[] = "add_bounding_box";
inline constexpr char ADD_SHADING[] = "add_shading";
inline constexpr char ADD_TREND_LINE[] = "add_trend_line";
inline constexpr char ADD_TEXT[] = "add_text";
inline constexpr char ADD_SYMBOL[] = "add_symbol";
inline constexpr char ADD_LEGEND[] = "add_legend";
inline constexpr char CONFIGURE_GRIDLINES[] = "configure_gridlines";
inline constexpr char ADD_VALUE_LABEL[] = "add_value_label";
} // namespace op_names

struct Chart {
    std::string title;
    std::string type;
    std::string x_name;
    std::string y_name;
    std::vector<Scalar> x_data;
    std::vector<double> y_data;
    std::optional<std::string> group_name;
    std::optional<std::vector<std::string>> group_data;
    /// Unknown chart keys round-trip through here untouched; lowering ignores them.
    nlohmann::json extra = nlohmann::json::object();

    /// Kind shared by all x values; nullopt when x_data is empty.
    std::optional<Scalar::Kind> x_kind() const {
        if (x_data.empty()) return std::nullopt;
        return x_data.front().kind();
    }
};

struct Task {
    std::string type;
    std::optional<std::string> sub_type;
};

enum class DataSource { external, derived, internal, none };

const char* to_string(DataSource source);
std::optional<DataSource> data_source_from_string(const std::string& text);

struct ValueUnit {
    std::string type; // text | image | number | config
    std::optional<nlohmann::json> content;
    std::optional<std::string> url;
};

struct DataSpec {
    DataSource source = DataSource::none;
    std::vector<ValueUnit> values;
};

enum class TargetType { data_items, coordinate, chart_element, annotation };

const char* to_string(TargetType type);
std::optional<TargetType> target_type_from_string(const std::string& text);

/// Polymorphic selector: exactly the parameter group matching `type` is
/// populated on a valid target.
struct Target {
    TargetType type = TargetType::data_items;
    std::optional<std::string> filter;      // data_items: filter-language source
    std::optional<Scalar> x, x2;            // coordinate
    std::optional<double> y, y2;            // coordinate
    std::optional<std::string> element_id;  // chart_element
    std::optional<std::string> ref_id;      // annotation
};

struct LineStyle {
    std::optional<double> size;      // px
    std::optional<bool> dashed;
    std::optional<std::string> color;
    std::optional<double> opacity;   // [0,1]
};

struct TextStyle {
    std::optional<double> font_size; // px, JSON key "fontSize"
    std::optional<std::string> color;
    std::optional<double> dx, dy;    // px
    std::optional<std::string> anchor; // start | middle | end
};

struct SymbolStyle {
    std::optional<std::string> shape; // circle | cross | square | triangle
    std::optional<double> size;       // area px^2
    std::optional<std::string> color;
};

struct RectStyle {
    std::optional<std::string> fill;
    std::optional<double> fill_opacity;  // [0,1], JSON key "fillOpacity"
    std::optional<std::string> stroke;
    std::optional<double> stroke_width;  // px, JSON key "strokeWidth"
};

struct Marker {
    std::optional<LineStyle> line;
    std::optional<TextStyle> text;
    std::optional<SymbolStyle> symbol;
    std::optional<RectStyle> rect;

    bool empty() const { return !line && !text && !symbol && !rect; }
};

struct Operation {
    std::string name;
    Target target;
    Marker marker;
};

struct Annotation {
    std::string id;
    Task task;
    DataSpec data;
    std::vector<Operation> operations;
};

struct AnnotatedChart {
    Chart chart;
    std::vector<Annotation> annotations;
};

/// Checks every grammar invariant and reports each violation with a stable
/// code and a JSON-pointer locator. An empty report means the document is
/// valid. Never fails; pure.
Diagnostics validate_document(const AnnotatedChart& doc, const Registry& registry);

/// Core plus registered chart types, sorted lexicographically.
std::vector<std::string> registered_chart_types(const Registry& registry);

} // namespace chartmark
