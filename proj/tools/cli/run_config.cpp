#include "cli/run_config.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "confalg/conf_space.hpp"
#include "confalg/document.hpp"
#include "confalg/errors.hpp"

namespace confalg::cli {

namespace {

int parse_int(std::string_view s, std::string_view spec) {
  int value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, "malformed generator spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Normalization parse_normalization(std::string_view s) {
  if (s == "constant") return Normalization::Constant;
  if (s == "dualizing") return Normalization::Dualizing;
  if (s == "both") return Normalization::Both;
  throw Error(ErrorCode::ParseError, "unknown normalization '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(s) + "'");
}

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::Constant: return "constant";
    case Normalization::Dualizing: return "dualizing";
    case Normalization::Both: return "both";
  }
  return "constant";
}

GradedSpace parse_generator_spec(std::string_view spec) {
  std::vector<std::pair<int, int>> entries;
  std::string_view rest = spec;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto colon = item.find(':');
    const int degree = parse_int(item.substr(0, colon), spec);
    const int weight = colon == std::string_view::npos ? 0 : parse_int(item.substr(colon + 1), spec);
    entries.emplace_back(degree, weight);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string label = entries.size() == 1 ? "x" : "x" + std::to_string(i + 1);
    basis.push_back({label, {entries[i].first, entries[i].second, 0}});
  }
  return GradedSpace(std::move(basis));
}

GCAlgebra load_input(const RunConfig& cfg) {
  if (const auto* spec = std::get_if<BuiltinSpec>(&cfg.input)) return builtin(spec->id, spec->param);
  return load_file(std::get<std::filesystem::path>(cfg.input));
}

GradedSpace resolve_generator(const RunConfig& cfg) {
  return cfg.generator ? parse_generator_spec(*cfg.generator) : default_generator();
}

}  // namespace confalg::cli
