#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "supertrop/scalar.hpp"

namespace supertrop {

/// A column vector in F^(n).
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  /// The all -inf vector.
  static Vector zeros(std::size_t n) { return Vector(std::vector<Scalar>(n)); }
  /// i-th vector of the standard d,s-base.
  static Vector unit(std::size_t n, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const Vector&, const Vector&) = default;

  Vector& operator+=(const Vector& o);

 private:
  std::vector<Scalar> entries_;
};

/// Entrywise semiring sum. Throws DimensionError on length mismatch.
Vector operator+(Vector a, const Vector& b);
/// Scalar multiple.
Vector operator*(const Scalar& a, Vector v);

/// sum_i coeffs[i] * vectors[i].
Vector lin_comb(std::span<const Scalar> coeffs, std::span<const Vector> vectors);

/// v^nu = v + v.
Vector nu(const Vector& v);

/// Member of the standard ghost subspace H0 = eV (every entry in G0).
bool is_ghost_vector(const Vector& v);

/// Every entry in T u {0} and at least one entry nonzero.
bool is_tangible_vector(const Vector& v);

/// Entrywise b |= a.
bool ghost_surpasses(const Vector& b, const Vector& a);

}  // namespace supertrop
