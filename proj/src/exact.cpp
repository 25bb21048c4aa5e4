#include "cga/exact.hpp"

#include <sstream>
#include <vector>

namespace cga {

Rational HalfInt::to_rational() const { return Rational(static_cast<long>(twice_), 2); }

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Rational::Rational(long n, long d) {
  if (d == 0) throw ZeroDivisor("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw ParseError("not an integer: " + num + "/" + den);
  if (d == 0) throw ZeroDivisor("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw ZeroDivisor("division of rational by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::pow(int k) const {
  if (k < 0) return Rational(1) / pow(-k);
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

Rational binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

Rational factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(r));
}

// ---------------------------------------------------------------------------

CScalar CScalar::monomial(const Rational& a, int power) {
  CScalar s;
  if (!a.is_zero()) s.terms_.emplace(power, a);
  return s;
}

Rational CScalar::constant_term() const { return coefficient(0); }

Rational CScalar::coefficient(int power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CScalar::add_term(int power, const Rational& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CScalar CScalar::operator-() const {
  CScalar r;
  for (const auto& [k, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -a);
  return r;
}

CScalar& CScalar::operator+=(const CScalar& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, a);
  return *this;
}

CScalar& CScalar::operator-=(const CScalar& o) {
  for (const auto& [k, a] : o.terms_) add_term(k, -a);
  return *this;
}

CScalar CScalar::operator+(const CScalar& o) const {
  CScalar r = *this;
  r += o;
  return r;
}

CScalar CScalar::operator-(const CScalar& o) const {
  CScalar r = *this;
  r -= o;
  return r;
}

CScalar CScalar::operator*(const CScalar& o) const {
  CScalar r;
  if (terms_.size() == 1 && o.terms_.size() == 1) {
    const auto& [k1, a1] = *terms_.begin();
    const auto& [k2, a2] = *o.terms_.begin();
    r.terms_.emplace(k1 + k2, a1 * a2);
    return r;
  }
  for (const auto& [k1, a1] : terms_)
    for (const auto& [k2, a2] : o.terms_) r.add_term(k1 + k2, a1 * a2);
  return r;
}

CScalar CScalar::div_monomial(const CScalar& divisor) const {
  if (divisor.is_zero()) throw ZeroDivisor("division by zero CScalar");
  if (!divisor.is_monomial())
    throw NotMonomial("divisor " + divisor.to_string() + " is not a monomial");
  const auto& [k, a] = *divisor.terms_.begin();
  CScalar r;
  for (const auto& [p, b] : terms_) r.terms_.emplace_hint(r.terms_.end(), p - k, b / a);
  return r;
}

std::optional<CScalar> CScalar::divide_exact(const CScalar& divisor) const {
  if (divisor.is_zero()) throw ZeroDivisor("division by zero CScalar");
  if (is_zero()) return CScalar();
  if (divisor.is_monomial()) return div_monomial(divisor);

  // Monomials are the units of the Laurent ring, so strip the lowest powers
  // and divide the remaining polynomials (divisor has nonzero constant term).
  const int shift = min_power() - divisor.min_power();
  const int dlo = divisor.min_power();
  const int ndeg = max_power() - min_power();
  const int ddeg = divisor.max_power() - dlo;
  if (ndeg < ddeg) return std::nullopt;

  std::vector<Rational> num(static_cast<std::size_t>(ndeg) + 1);
  std::vector<Rational> den(static_cast<std::size_t>(ddeg) + 1);
  for (const auto& [k, a] : terms_) num[static_cast<std::size_t>(k - min_power())] = a;
  for (const auto& [k, a] : divisor.terms_) den[static_cast<std::size_t>(k - dlo)] = a;

  std::vector<Rational> quot(static_cast<std::size_t>(ndeg - ddeg) + 1);
  const Rational& lead = den.back();
  for (int i = ndeg - ddeg; i >= 0; --i) {
    const Rational q = num[static_cast<std::size_t>(i + ddeg)] / lead;
    quot[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= ddeg; ++j) num[static_cast<std::size_t>(i + j)] -= q * den[static_cast<std::size_t>(j)];
  }
  for (const auto& r : num)
    if (!r.is_zero()) return std::nullopt;

  CScalar out;
  for (std::size_t i = 0; i < quot.size(); ++i) out.add_term(static_cast<int>(i) + shift, quot[i]);
  return out;
}

CScalar CScalar::rescale_symbol(const Rational& factor) const {
  CScalar r;
  for (const auto& [k, a] : terms_) r.add_term(k, a * factor.pow(k));
  return r;
}

std::string CScalar::to_string(const std::string& symbol) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, a] = *it;
    Rational mag = a.sign() < 0 ? -a : a;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.to_string();
      continue;
    }
    if (!mag.is_one()) os << mag.to_string();
    os << symbol;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace cga
