#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chartmark/ast.hpp"
#include "chartmark/backend.hpp"
#include "chartmark/diagnostics.hpp"

namespace chartmark {

/// Lowering rule for an extension operation: reads the operation and the
/// resolved annotation through the context and emits IR layers or axis
/// overrides.
using LoweringRule = std::function<void(LoweringContext&, const Operation&)>;

/// Code generator for a whole backend: RenderSpec in, artifact text out.
using BackendCodegen = std::function<std::string(const RenderSpec&)>;

struct ExtensionDescriptor {
    enum class Kind { chart_type, operation, subtype };

    Kind kind = Kind::operation;
    std::string name;
    /// For subtype extensions: the task type the subtype belongs to.
    std::string task_type = "summary";
    /// Optional extra validation, run by validate_document on matching nodes.
    std::function<std::optional<Diagnostic>(const Operation&, const std::string& path)> validator;
    /// Lowering rules keyed by surface name; operations must provide "ir".
    std::map<std::string, LoweringRule> lowering;
    /// For subtype extensions: how to compute the derived scalar.
    std::function<double(const std::vector<Row>&)> aggregate;
};

/// Session-scoped vocabulary and backend table. A fresh Registry holds the
/// core grammar plus the "vegalite" and "ir" backends. Registration happens
/// during setup; afterwards the instance is read-only and freely shareable.
class Registry {
public:
    Registry();

    Registry(const Registry&) = delete;
    Registry& operator=(const Registry&) = delete;

    // --- vocabulary ---
    bool has_chart_type(const std::string& name) const;
    bool has_operation(const std::string& name) const;
    bool has_subtype(const std::string& task_type, const std::string& name) const;

    /// Core plus extensions, sorted lexicographically.
    std::vector<std::string> chart_types() const;
    std::vector<std::string> operation_names() const;

    bool is_extension_operation(const std::string& name) const;
    const ExtensionDescriptor* find_extension(const std::string& name) const;

    /// Gates parse/validate on the new name and installs its lowering.
    /// EXT_DUPLICATE on any collision with core or registered vocabulary;
    /// EXT_MISSING_LOWERING for an operation without an "ir" rule.
    std::optional<Diagnostic> register_extension(ExtensionDescriptor descriptor);

    // --- backends ---
    std::optional<Diagnostic> register_backend(const std::string& name, BackendCodegen codegen);
    const BackendCodegen* find_backend(const std::string& name) const;
    std::vector<std::string> backend_names() const;

private:
    std::set<std::string> core_chart_types_;
    std::set<std::string> core_operations_;
    std::map<std::string, std::set<std::string>> core_subtypes_; // task type -> names

    std::map<std::string, ExtensionDescriptor> extensions_; // by name
    std::map<std::string, BackendCodegen> backends_;

    std::mutex write_mutex_; // registrations serialize; reads are lock-free
};

/// Registry seeded with only the core grammar (what a fresh Registry gives).
/// Convenience for callers that need a shared default session.
const Registry& core_registry();

} // namespace chartmark
