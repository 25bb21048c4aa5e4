#pragma once

// Exact coefficient arithmetic: half-integers, arbitrary precision rationals
// and Laurent polynomials in the formal central charge c.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "cga/errors.hpp"

namespace cga {

class Rational;

/// A number q in (1/2)Z, stored as twice = 2q.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t n) { return HalfInt(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Only meaningful when is_integer().
  constexpr std::int64_t as_integer() const { return twice_ / 2; }
  Rational to_rational() const;
  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  constexpr HalfInt operator*(std::int64_t k) const { return HalfInt(twice_ * k); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// Reduced fraction with positive denominator, backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  /// Parses "p" or "p/q" with arbitrary precision integers.
  static Rational parse(const std::string& num, const std::string& den = "1");

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  std::string to_string() const;
  const mpq_class& raw() const { return v_; }

  // GMP arithmetic on canonical operands is already canonical.
  Rational operator-() const { return Rational(Canonical{}, -v_); }
  Rational operator+(const Rational& o) const { return Rational(Canonical{}, v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(Canonical{}, v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(Canonical{}, v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational pow(int k) const;

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    const int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Canonical {};
  Rational(Canonical, mpq_class v) : v_(std::move(v)) {}
  mpq_class v_{0};
};

Rational binomial(std::int64_t n, std::int64_t k);
Rational factorial(std::int64_t n);

/// Laurent polynomial sum_k a_k c^k over the rationals. Zero coefficients are
/// never stored, so equality is structural.
class CScalar {
 public:
  using Terms = std::map<int, Rational>;

  CScalar() = default;
  CScalar(const Rational& r) { if (!r.is_zero()) terms_.emplace(0, r); }  // NOLINT
  CScalar(long n) : CScalar(Rational(n)) {}                               // NOLINT
  static CScalar monomial(const Rational& a, int power);
  /// The formal symbol c.
  static CScalar c() { return monomial(Rational(1), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// True for zero and for pure rationals (power 0 only).
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// The power-0 coefficient.
  Rational constant_term() const;
  Rational coefficient(int power) const;
  int min_power() const { return terms_.begin()->first; }
  int max_power() const { return terms_.rbegin()->first; }

  CScalar operator-() const;
  CScalar operator+(const CScalar& o) const;
  CScalar operator-(const CScalar& o) const;
  CScalar operator*(const CScalar& o) const;
  CScalar& operator+=(const CScalar& o);
  CScalar& operator-=(const CScalar& o);
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }

  /// Exact quotient by a monomial a*c^k. Throws NotMonomial / ZeroDivisor.
  CScalar div_monomial(const CScalar& divisor) const;
  /// Exact quotient in the Laurent ring, if one exists. Throws ZeroDivisor.
  std::optional<CScalar> divide_exact(const CScalar& divisor) const;
  /// Maps c^k to (factor^k) c^k; used to re-express c through another symbol.
  CScalar rescale_symbol(const Rational& factor) const;

  bool operator==(const CScalar& o) const { return terms_ == o.terms_; }
  /// Total order, only for use as a sort key.
  bool operator<(const CScalar& o) const { return terms_ < o.terms_; }

  /// Plain text, e.g. "-3/2c^2 + 1 + c^-1" in the given symbol.
  std::string to_string(const std::string& symbol = "c") const;

 private:
  void add_term(int power, const Rational& a);
  Terms terms_;
};

inline CScalar operator*(const Rational& r, const CScalar& s) { return CScalar(r) * s; }

}  // namespace cga
