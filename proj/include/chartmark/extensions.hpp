#pragma once

#include "chartmark/registry.hpp"

namespace chartmark::extensions {

/// The add_stroke operation: outlines the data items selected by the filter,
/// e.g. specific slices of a pie chart. Lowered as conditional stroke /
/// strokeWidth patches on the base encoding. Stroke color comes from
/// marker.rect.stroke (default black); width from marker.rect.strokeWidth.
ExtensionDescriptor add_stroke();

} // namespace chartmark::extensions
