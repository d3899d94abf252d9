#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chartmark/ast.hpp"
#include "chartmark/diagnostics.hpp"

namespace chartmark {

class Registry;

struct ParseResult {
    std::optional<AnnotatedChart> document;
    Diagnostics errors;

    bool ok() const { return document.has_value() && errors.empty(); }
};

/// Deserializes ChartMark JSON. All independent field errors are collected in
/// one pass; the document is only produced when no error was found.
ParseResult parse(std::string_view text, const Registry& registry);

/// Canonical JSON: keys sorted, compact, shortest round-trip numbers,
/// trailing newline. serialize(parse(serialize(d))) == serialize(d).
std::string serialize(const AnnotatedChart& doc);

/// The document as a JSON value (serialize is dump() of this).
nlohmann::json to_json(const AnnotatedChart& doc);

} // namespace chartmark
