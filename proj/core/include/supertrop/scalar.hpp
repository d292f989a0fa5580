#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supertrop {

/// An element of the ordered group (Q, +) underlying the semifield.
///
/// Values are exact rationals kept in lowest terms, so equality is
/// structural. The group operation is rational addition; the order is the
/// usual one on Q.
class GroupValue {
 public:
  GroupValue() = default;
  GroupValue(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  explicit GroupValue(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// num/den; throws DomainError for den == 0.
  static GroupValue fraction(long num, long den);

  const mpq_class& rational() const { return q_; }
  bool is_integer() const { return q_.get_den() == 1; }

  GroupValue& operator+=(const GroupValue& o) { q_ += o.q_; return *this; }
  GroupValue& operator-=(const GroupValue& o) { q_ -= o.q_; return *this; }
  friend GroupValue operator+(GroupValue a, const GroupValue& b) { return a += b; }
  friend GroupValue operator-(GroupValue a, const GroupValue& b) { return a -= b; }
  friend GroupValue operator-(const GroupValue& a) { return GroupValue(mpq_class(-a.q_)); }

  /// Rational scaling, used for powers a^r (value * r).
  friend GroupValue operator*(const GroupValue& a, const GroupValue& b) {
    return GroupValue(mpq_class(a.q_ * b.q_));
  }
  /// Throws DomainError when b is zero.
  friend GroupValue operator/(const GroupValue& a, const GroupValue& b);

  friend bool operator==(const GroupValue& a, const GroupValue& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q".
  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_{0};
};

/// Parses an optionally signed integer or p/q in lowest terms with q > 0.
GroupValue parse_group_value(std::string_view text);

enum class Layer : std::uint8_t { Zero, Tangible, Ghost };

/// An element of the supertropical semifield F = T u G u {0} built over
/// max-plus rationals.
///
/// The semiring sum keeps the nu-larger operand and turns ties into ghosts;
/// the product adds group values and is ghost when either factor is.
/// The multiplicative unit is tangible 0 and the zero is written `-inf`.
class Scalar {
 public:
  /// The additive zero.
  Scalar() = default;

  static Scalar zero() { return Scalar(); }
  static Scalar tangible(GroupValue v) { return Scalar(Layer::Tangible, std::move(v)); }
  static Scalar ghost(GroupValue v) { return Scalar(Layer::Ghost, std::move(v)); }
  /// Multiplicative unit (tangible 0).
  static Scalar one() { return tangible(0); }
  /// The ghost unit e = 1 + 1.
  static Scalar ghost_one() { return ghost(0); }

  Layer layer() const { return layer_; }
  bool is_zero() const { return layer_ == Layer::Zero; }
  bool is_tangible() const { return layer_ == Layer::Tangible; }
  bool is_ghost() const { return layer_ == Layer::Ghost; }
  /// Member of G0 = G u {0}.
  bool in_ghost_ideal() const { return layer_ != Layer::Tangible; }

  /// Group value; meaningless (zero) for the zero scalar.
  const GroupValue& value() const { return value_; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.layer_ == b.layer_ && (a.layer_ == Layer::Zero || a.value_ == b.value_);
  }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

 private:
  Scalar(Layer layer, GroupValue v) : layer_(layer), value_(std::move(v)) {}

  Layer layer_ = Layer::Zero;
  GroupValue value_;
};

inline Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }

/// The ghost map: tangible q -> ghost q, identity on G0.
Scalar nu(const Scalar& a);

/// Multiplicative inverse; keeps the layer. Throws DomainError on zero.
Scalar inv(const Scalar& a);

/// a^r for rational r. F is divisible, so r = 1/2 is the unique square root.
/// Zero raised to r <= 0 throws DomainError.
Scalar power(const Scalar& a, const GroupValue& r);

enum class NuOrder { Lt, Match, Gt };

/// Compares nu-values, with zero as the bottom element.
NuOrder nu_cmp(const Scalar& a, const Scalar& b);

inline bool nu_less(const Scalar& a, const Scalar& b) { return nu_cmp(a, b) == NuOrder::Lt; }
inline bool nu_less_equal(const Scalar& a, const Scalar& b) { return nu_cmp(a, b) != NuOrder::Gt; }
inline bool nu_matched(const Scalar& a, const Scalar& b) { return nu_cmp(a, b) == NuOrder::Match; }

/// The tangible element with the same nu-value. Throws DomainError on zero.
Scalar tangible_lift(const Scalar& a);

/// b |= a: b = a + c for some c in G0.
bool ghost_surpasses(const Scalar& b, const Scalar& a);

/// `-inf`, `q` or `qg`.
std::string to_string(const Scalar& a);
Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& a);
std::ostream& operator<<(std::ostream& os, const GroupValue& v);

}  // namespace supertrop
