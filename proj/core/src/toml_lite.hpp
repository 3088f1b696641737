#pragma once

#include <string_view>

#include <json.hpp>

namespace confalg::detail {

/// Parses the TOML subset used by algebra documents: [table] and [[array]]
/// headers with bare keys, key = value pairs, basic and literal strings,
/// integers, booleans, arrays (multi-line allowed) and inline tables.
/// Throws Error(ParseError) with a line number.
nlohmann::json parse_toml(std::string_view text);

}  // namespace confalg::detail
