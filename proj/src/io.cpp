#include "liptrop/io.hpp"

#include <fstream>

namespace liptrop::io {

namespace {

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, path.string() + ": cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, path.string() + ": " + e.what());
  }
  return doc;
}

const json& field(const json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(Errc::parse_error, where + ": missing field '" + key + "'");
  }
  return *it;
}

int int_field(const json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw Error(Errc::parse_error, where + ": expected an integer");
  }
  return value.get<int>();
}

}  // namespace

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where + ": " + e.what());
    }
  }
  throw Error(Errc::parse_error, where + ": expected a rational string like \"3/4\"");
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

GroupPtr group_from_json(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw Error(Errc::parse_error, where + ": expected an object");
  const json& table_json = field(doc, "table", where);
  if (!table_json.is_array() || table_json.empty()) {
    throw Error(Errc::parse_error, where + ".table: expected a nonempty array of rows");
  }
  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < table_json.size(); ++i) {
    const json& row = table_json[i];
    if (!row.is_array()) {
      throw Error(Errc::parse_error, where + ".table[" + std::to_string(i) + "]: expected a row");
    }
    std::vector<int> out_row;
    for (std::size_t j = 0; j < row.size(); ++j) {
      out_row.push_back(int_field(row[j], where + ".table[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]"));
    }
    table.push_back(std::move(out_row));
  }
  if (auto it = doc.find("order"); it != doc.end()) {
    if (int_field(*it, where + ".order") != static_cast<int>(table.size())) {
      throw Error(Errc::parse_error, where + ".order: does not match the table size " +
                                         std::to_string(table.size()));
    }
  }
  std::string name = doc.value("name", std::string());
  std::optional<int> identity;
  if (auto it = doc.find("identity"); it != doc.end()) {
    identity = int_field(*it, where + ".identity");
  }
  return validate_group(table, std::move(name), identity);
}

GroupPtr load_group(const std::filesystem::path& path) {
  return group_from_json(parse_file(path), path.string());
}

json group_to_json(const FiniteGroup& group) {
  json doc;
  doc["name"] = group.name();
  doc["order"] = group.order();
  doc["identity"] = group.identity();
  json table = json::array();
  for (int i = 0; i < group.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < group.order(); ++j) row.push_back(group.op(i, j));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc;
}

MetricPtr load_metric(const std::filesystem::path& path) {
  json doc = parse_file(path);
  const std::string where = path.string();
  const json& group_json = field(doc, "group", where);
  GroupPtr group;
  if (group_json.is_string()) {
    group = load_group(path.parent_path() / group_json.get<std::string>());
  } else {
    group = group_from_json(group_json, where + ".group");
  }
  const json& matrix = field(doc, "matrix", where);
  int n = group->order();
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != n) {
    throw Error(Errc::parse_error, where + ".matrix: expected " + std::to_string(n) + " rows");
  }
  std::vector<Rational> dist;
  dist.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const json& row = matrix[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(Errc::parse_error, where + ".matrix[" + std::to_string(i) + "]: expected " +
                                         std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      dist.push_back(rational_from_json(
          row[j], where + ".matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
  }
  std::string name = doc.value("name", std::string("matrix"));
  return std::make_shared<InvariantMetric>(std::move(group), std::move(dist), std::move(name));
}

json metric_to_json(const InvariantMetric& metric) {
  json doc;
  doc["name"] = metric.name();
  doc["group"] = group_to_json(metric.group());
  json matrix = json::array();
  int n = metric.group().order();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(metric.dist(i, j).str());
    matrix.push_back(std::move(row));
  }
  doc["matrix"] = std::move(matrix);
  return doc;
}

Context load_context(const std::filesystem::path& path) {
  json doc = parse_file(path);
  if (doc.is_object() && doc.contains("matrix")) return Context(load_metric(path));
  return Context::discrete(group_from_json(doc, path.string()));
}

LipFn load_fn(const std::filesystem::path& path, const Context& ctx) {
  json doc = parse_file(path);
  const std::string where = path.string();
  const json& values_json = field(doc, "values", where);
  if (!values_json.is_array() || static_cast<int>(values_json.size()) != ctx.order()) {
    throw Error(Errc::parse_error, where + ".values: expected " + std::to_string(ctx.order()) +
                                       " entries for " + ctx.label());
  }
  std::vector<Rational> values;
  values.reserve(values_json.size());
  for (std::size_t i = 0; i < values_json.size(); ++i) {
    values.push_back(rational_from_json(values_json[i], where + ".values[" + std::to_string(i) + "]"));
  }
  return LipFn(ctx, std::move(values));
}

json fn_to_json(const LipFn& f) {
  json doc;
  doc["values"] = rationals_to_json(f.values());
  return doc;
}

LengthWeights load_weights(const std::filesystem::path& path, const FiniteGroup& group) {
  json doc = parse_file(path);
  const std::string where = path.string();
  const json& weights_json = field(doc, "weights", where);
  if (!weights_json.is_object()) {
    throw Error(Errc::parse_error, where + ".weights: expected an object keyed by element index");
  }
  LengthWeights weights;
  for (const auto& [key, value] : weights_json.items()) {
    int index = 0;
    try {
      index = std::stoi(key);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, where + ".weights: bad element index '" + key + "'");
    }
    if (index < 0 || index >= group.order()) {
      throw Error(Errc::parse_error, where + ".weights: element index " + key + " out of range");
    }
    weights.weight[index] = rational_from_json(value, where + ".weights[" + key + "]");
  }
  return weights;
}

json report_to_json(const Report& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["check"] = c.check;
    entry["status"] = c.pass ? "pass" : "fail";
    entry["samples"] = c.samples;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return checks;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::parse_error, tmp.string() + ": cannot open for writing");
    out << content;
    if (!out.flush()) throw Error(Errc::parse_error, tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace liptrop::io
