#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chartmark/ast.hpp"
#include "chartmark/diagnostics.hpp"
#include "chartmark/registry.hpp"

namespace chartmark {

struct CompileOptions {
    std::string backend = "vegalite";
    bool base_only = false;
};

struct CompileResult {
    std::optional<std::string> output;
    Diagnostics diagnostics;

    bool ok() const { return output.has_value() && !has_errors(diagnostics); }
};

/// Full pipeline on an already-typed document: validate, resolve, lower,
/// emit through the named backend.
CompileResult compile_document(const AnnotatedChart& doc, const Registry& registry,
                               const CompileOptions& options = {});

/// parse + compile_document.
CompileResult compile_text(std::string_view text, const Registry& registry,
                           const CompileOptions& options = {});

/// parse + validate_document; parse errors short-circuit validation.
Diagnostics check_text(std::string_view text, const Registry& registry);

} // namespace chartmark
