#pragma once

#include <string>

#include <json.hpp>

#include "cli/run_config.hpp"
#include "confalg/conf_space.hpp"

namespace confalg::cli {

using Document = nlohmann::ordered_json;

Document meta_document(const SpaceMeta& meta);

/// {"space", "normalization", "associated_graded", ["exact"], "cards": [{"k", "betti": [...]}]}.
/// With Normalization::Both each card carries "betti" (constant) and
/// "betti_dualizing". Throws Error(DualizingUnavailable).
Document result_document(const ConfResult& r, Normalization n);

/// Renders a result document. Rows are sorted by (k, degree, weight).
std::string render_result(const Document& doc, OutputFormat format);

Document stability_document(const StabilityReport& report, const SpaceMeta& meta, int max_card);
std::string render_stability(const Document& doc, OutputFormat format);

}  // namespace confalg::cli
