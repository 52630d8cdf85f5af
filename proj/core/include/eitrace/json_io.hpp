#pragma once

#include "eitrace/fincat.hpp"
#include "eitrace/matrix.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace eitrace {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json_text(std::string_view text);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

Json category_to_json(const FinCategory& c);
FinCategory category_from_json(const Json& j);

/// Row-major array of "p/q" strings.
Json matrix_to_json(const Matrix& m);
/// Expects `rows` x `cols` entries; numbers or "p/q" strings are accepted.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view what);

} // namespace eitrace
