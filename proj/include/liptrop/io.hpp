#pragma once

#include <filesystem>

#include "liptrop/context.hpp"
#include "liptrop/lip.hpp"
#include "liptrop/report.hpp"

#include "json.hpp"

namespace liptrop::io {

using json = nlohmann::ordered_json;

/// Group file: {"name": str, "order": n, "identity": int, "table": [[int,...],...]}.
/// Indices are 0-based. The first violated invariant is reported.
GroupPtr load_group(const std::filesystem::path& path);
GroupPtr group_from_json(const json& doc, const std::string& where);
json group_to_json(const FiniteGroup& group);

/// Metric file: {"group": <file name or inline object>, "matrix": [["p/q",...],...]}.
/// Rationals are strings in "p/q" or integer form; bare JSON integers are
/// also accepted on input.
MetricPtr load_metric(const std::filesystem::path& path);
json metric_to_json(const InvariantMetric& metric);

/// A context path is either a group file (discrete metric implied) or a
/// metric file.
Context load_context(const std::filesystem::path& path);

/// Function file: {"values": ["p/q", ...]} of length matching the carrier.
LipFn load_fn(const std::filesystem::path& path, const Context& ctx);
json fn_to_json(const LipFn& f);

/// Weights file: {"weights": {"<element index>": "p/q", ...}}.
LengthWeights load_weights(const std::filesystem::path& path, const FiniteGroup& group);

Rational rational_from_json(const json& value, const std::string& where);
json rationals_to_json(const std::vector<Rational>& values);

json report_to_json(const Report& report);

void write_file_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace liptrop::io
