#include "supertrop/vector.hpp"

#include <algorithm>
#include <string>

#include "supertrop/error.hpp"

namespace supertrop {

namespace {

void require_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v[i] = Scalar::one();
  return v;
}

Vector& Vector::operator+=(const Vector& o) {
  require_same_dim(*this, o, "vector sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }

Vector operator*(const Scalar& a, Vector v) {
  for (std::size_t i = 0; i < v.dim(); ++i) v[i] = a * v[i];
  return v;
}

Vector lin_comb(std::span<const Scalar> coeffs, std::span<const Vector> vectors) {
  if (coeffs.size() != vectors.size()) {
    throw DimensionError("linear combination: " + std::to_string(coeffs.size()) + " coefficients for " +
                         std::to_string(vectors.size()) + " vectors");
  }
  if (vectors.empty()) {
    throw DimensionError("linear combination of no vectors has no dimension");
  }
  Vector out = Vector::zeros(vectors.front().dim());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    require_same_dim(out, vectors[k], "linear combination");
    out += coeffs[k] * vectors[k];
  }
  return out;
}

Vector nu(const Vector& v) { return v + v; }

bool is_ghost_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.in_ghost_ideal(); });
}

bool is_tangible_vector(const Vector& v) {
  return std::none_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_ghost(); }) &&
         std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
}

bool ghost_surpasses(const Vector& b, const Vector& a) {
  require_same_dim(b, a, "ghost surpass");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!ghost_surpasses(b[i], a[i])) return false;
  }
  return true;
}

}  // namespace supertrop
