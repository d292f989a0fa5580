#include "supertrop/scalar.hpp"

#include <cctype>
#include <ostream>

#include "supertrop/error.hpp"

namespace supertrop {

GroupValue GroupValue::fraction(long num, long den) {
  if (den == 0) {
    throw DomainError("division by zero: rational with zero denominator");
  }
  return GroupValue(mpq_class(num, den));
}

GroupValue operator/(const GroupValue& a, const GroupValue& b) {
  if (sgn(b.q_) == 0) {
    throw DomainError("division by zero: rational exponent or scale is 0");
  }
  return GroupValue(mpq_class(a.q_ / b.q_));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

GroupValue parse_group_value(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  if (negative) n = -n;
  if (slash == std::string_view::npos) {
    return GroupValue(mpq_class(n));
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("rational '" + std::string(text) + "' has zero denominator");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw ParseError("rational '" + std::string(text) + "' is not in lowest terms");
  }
  return GroupValue(mpq_class(n, d));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const auto c = value_ <=> o.value_;
  if (c < 0) {
    *this = o;
  } else if (c == 0) {
    layer_ = Layer::Ghost;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  value_ += o.value_;
  if (o.is_ghost()) layer_ = Layer::Ghost;
  return *this;
}

Scalar nu(const Scalar& a) {
  if (a.is_zero()) return a;
  return Scalar::ghost(a.value());
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DomainError("division by zero: inverse of -inf");
  return a.is_ghost() ? Scalar::ghost(-a.value()) : Scalar::tangible(-a.value());
}

Scalar power(const Scalar& a, const GroupValue& r) {
  if (a.is_zero()) {
    if (r <= GroupValue(0)) {
      throw DomainError("division by zero: -inf raised to a non-positive power " + r.to_string());
    }
    return a;
  }
  const GroupValue v = a.value() * r;
  return a.is_ghost() ? Scalar::ghost(v) : Scalar::tangible(v);
}

NuOrder nu_cmp(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return NuOrder::Match;
    return a.is_zero() ? NuOrder::Lt : NuOrder::Gt;
  }
  const auto c = a.value() <=> b.value();
  if (c < 0) return NuOrder::Lt;
  return c > 0 ? NuOrder::Gt : NuOrder::Match;
}

Scalar tangible_lift(const Scalar& a) {
  if (a.is_zero()) throw DomainError("tangible lift of -inf: no tangible element is nu-matched to zero");
  return Scalar::tangible(a.value());
}

bool ghost_surpasses(const Scalar& b, const Scalar& a) {
  if (b == a) return true;
  return b.is_ghost() && nu_cmp(b, a) != NuOrder::Lt;
}

std::string to_string(const Scalar& a) {
  switch (a.layer()) {
    case Layer::Zero:
      return "-inf";
    case Layer::Tangible:
      return a.value().to_string();
    case Layer::Ghost:
      return a.value().to_string() + "g";
  }
  return {};
}

Scalar parse_scalar(std::string_view text) {
  if (text == "-inf") return Scalar::zero();
  if (!text.empty() && text.back() == 'g') {
    text.remove_suffix(1);
    return Scalar::ghost(parse_group_value(text));
  }
  return Scalar::tangible(parse_group_value(text));
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const GroupValue& v) { return os << v.to_string(); }

}  // namespace supertrop
