#pragma once

// Exact arithmetic substrate: big integers, rationals, and Laurent
// polynomials in the class L of the affine line.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wmk {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt integer) : num_(std::move(integer)) {}  // NOLINT: implicit by intent
  Rational(std::int64_t integer) : num_(integer) {}       // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  /// -1, 0 or +1.
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "num/den", denominator always present ("0/1", "-9/16").
  std::string to_string() const;
  /// Accepts "a/b" or a bare integer "a". Throws ParseError or DomainError.
  static Rational parse(std::string_view text);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

/// Degree of a Laurent polynomial; the zero polynomial has degree
/// neg_infinity(), which orders below every integer.
class Degree {
 public:
  constexpr Degree(std::int64_t value) : value_(value) {}  // NOLINT
  static constexpr Degree neg_infinity() { return Degree(kSentinel, 0); }

  constexpr bool is_finite() const { return value_ != kSentinel; }
  /// Throws DomainError on neg_infinity().
  std::int64_t value() const;
  std::string to_string() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  static constexpr std::int64_t kSentinel = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t raw, int) : value_(raw) {}
  std::int64_t value_;
};

inline constexpr Degree kNegInfinity = Degree::neg_infinity();

/// Sparse Laurent polynomial with integer coefficients in the symbol L.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, BigInt, std::greater<>>;  // descending exponent

  LaurentPoly() = default;
  LaurentPoly(BigInt constant);       // NOLINT
  LaurentPoly(std::int64_t constant);  // NOLINT

  static LaurentPoly monomial(BigInt coefficient, Exponent exponent);
  /// L^exponent
  static LaurentPoly power_of_L(Exponent exponent);
  /// L - 1, the class of the multiplicative group.
  static LaurentPoly gm();

  const Terms& terms() const { return terms_; }
  BigInt coefficient(Exponent exponent) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Largest exponent with a nonzero coefficient.
  Degree degree() const;

  /// Multiplication by L^k.
  LaurentPoly shifted(Exponent k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// Adds coefficient * L^exponent in place.
  void add_monomial(const BigInt& coefficient, Exponent exponent);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form such as "L^3 + 2*L^2 - 2*L^-1".
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace wmk
