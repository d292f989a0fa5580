#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <doctest.h>

#include "supertrop/io.hpp"
#include "supertrop/matrix.hpp"
#include "supertrop/scalar.hpp"
#include "supertrop/vector.hpp"

// Literal helpers: scalars, vectors and matrices in the text grammar.
namespace ref {

inline supertrop::Scalar S(std::string_view s) { return supertrop::parse_scalar(s); }
inline supertrop::Vector V(std::string_view s) { return supertrop::parse_vector(s); }
inline supertrop::Matrix M(std::string_view s) { return supertrop::parse_matrix(s); }
/// Vectors given as the columns of a matrix literal.
inline std::vector<supertrop::Vector> cols(std::string_view s) { return M(s).columns(); }

inline std::vector<supertrop::Vector> standard_base(std::size_t n) {
  std::vector<supertrop::Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(supertrop::Vector::unit(n, i));
  return b;
}

}  // namespace ref

namespace doctest {

template <>
struct StringMaker<supertrop::Vector> {
  static String convert(const supertrop::Vector& v) { return ("(" + supertrop::format_vector(v) + ")").c_str(); }
};

template <>
struct StringMaker<supertrop::Matrix> {
  static String convert(const supertrop::Matrix& m) {
    std::string s = supertrop::format_matrix(m);
    for (auto& c : s)
      if (c == '\n') c = ';';
    return ("[" + s + "]").c_str();
  }
};

}  // namespace doctest
