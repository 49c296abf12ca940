#pragma once

#include <string>

#include "resmith/analyze.hpp"

namespace resmith {

/// Stable, pretty-printed JSON. Scalars and polynomials are strings in the
/// canonical printer's format, so nothing passes through a binary float.
std::string report_to_json(const AnalysisReport& report);

/// Inverse of report_to_json. SyntaxError on malformed documents.
AnalysisReport report_from_json(const std::string& text);

}  // namespace resmith
