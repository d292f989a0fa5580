#include "supertrop/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "supertrop/error.hpp"

namespace supertrop {

namespace {

Matrix parse_json_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON matrix: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw ParseError("JSON matrix needs an object with a \"rows\" array");
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw ParseError("JSON matrix rows must be arrays of scalar strings");
    auto& out = rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_string()) throw ParseError("JSON matrix entries must be scalar strings such as \"1/2g\"");
      out.push_back(parse_scalar(x.get<std::string>()));
    }
  }
  if (rows.empty() || rows.front().empty()) throw ParseError("empty matrix");
  try {
    return Matrix::from_rows(rows);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += '\n';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
  }
  return out;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix");
  if (text[first] == '{') return parse_json_matrix(text);

  std::vector<std::vector<Scalar>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream segments(line);
    std::string segment;
    while (std::getline(segments, segment, ';')) {
      std::istringstream tokens(segment);
      std::vector<Scalar> row;
      for (std::string tok; tokens >> tok;) row.push_back(parse_scalar(tok));
      if (row.empty()) continue;
      if (!rows.empty() && row.size() != rows.front().size()) {
        throw ParseError("ragged matrix: row " + std::to_string(rows.size() + 1) + " has " +
                         std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw ParseError("empty matrix");
  return Matrix::from_rows(rows);
}

Vector parse_vector(std::string_view text) {
  const Matrix m = parse_matrix(text);
  if (m.rows() == 1) return m.row(0);
  if (m.cols() == 1) return m.col(0);
  throw ParseError("expected a vector (one row or one column), got a " + std::to_string(m.rows()) + "x" +
                   std::to_string(m.cols()) + " matrix");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace supertrop
