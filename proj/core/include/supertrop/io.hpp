#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "supertrop/matrix.hpp"
#include "supertrop/vector.hpp"

namespace supertrop {

/// One row per line, entries separated by a single space.
std::string format_matrix(const Matrix& m);
/// Entries on one line.
std::string format_vector(const Vector& v);

/// Matrix text: rows on separate lines or separated by ';', whitespace
/// between scalar tokens, '#' starts a comment line. Input whose first
/// non-blank character is '{' is read as {"rows": [["0", "1"], ...]}.
/// Throws ParseError on ragged, empty or malformed input.
Matrix parse_matrix(std::string_view text);

/// A single row or a single column in matrix syntax.
Vector parse_vector(std::string_view text);

/// Throws ParseError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

inline Matrix read_matrix_file(const std::filesystem::path& path) { return parse_matrix(read_text_file(path)); }

}  // namespace supertrop
