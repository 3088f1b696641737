#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "confalg/gc_algebra.hpp"

namespace confalg {

/// Reads an algebra document without running validate(). Throws
/// Error(ParseError) or Error(DuplicateLabel).
GCAlgebra parse_document(std::string_view text);

/// parse_document() followed by validate(); throws ValidationError carrying
/// the diagnostics when the table is not a graded-commutative algebra.
GCAlgebra load(std::string_view text);
GCAlgebra load_file(const std::filesystem::path& path);

/// Canonical document text; load(serialize(a)) == a.
std::string serialize(const GCAlgebra& a);

}  // namespace confalg
