#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "confalg/gc_algebra.hpp"
#include "confalg/graded_space.hpp"

namespace confalg::cli {

enum class Normalization { Constant, Dualizing, Both };
enum class OutputFormat { Table, Json, Csv };

Normalization parse_normalization(std::string_view s);
OutputFormat parse_format(std::string_view s);
std::string_view to_string(Normalization n);

struct BuiltinSpec {
  BuiltinId id = BuiltinId::AffineSpace;
  int param = 1;
};

struct RunConfig {
  std::variant<BuiltinSpec, std::filesystem::path> input;
  int max_card = 1;
  /// "deg[:weight][,deg[:weight]...]"; absent means the constant sheaf.
  std::optional<std::string> generator;
  Normalization normalization = Normalization::Constant;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::filesystem::path> cache_dir;
};

/// Throws Error(ParseError) on malformed specs.
GradedSpace parse_generator_spec(std::string_view spec);

/// Builtin or loaded (and validated) document.
GCAlgebra load_input(const RunConfig& cfg);

GradedSpace resolve_generator(const RunConfig& cfg);

}  // namespace confalg::cli
