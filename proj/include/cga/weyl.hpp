#pragma once

// Normal-ordered differential operators in two coordinate charts.
//
// Free chart: variables (t, y_1..y_L), derivatives (d_t, d_{y_a}).
// Osc chart:  variables (u_1..u_L) plus exponential weights exp(mu s) with
//             mu in (1/2)Z, derivatives (d_s, d_{u_a}). The time s never
//             appears polynomially.
//
// A term is coef * exp(mu s) * x^var * d^der with every multiplication
// operator to the left of every derivative. Index 0 of the exponent vectors
// is t (Free) or s (Osc); index a in 1..L is the a-th space variable. In the
// Osc chart var[0] is always 0.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cga/exact.hpp"

namespace cga {

enum class ChartKind { Free, Osc };

/// Throws BadEll unless ell is in 1/2 + N_0.
void require_half_odd(HalfInt ell);

struct Chart {
  ChartKind kind = ChartKind::Free;
  HalfInt ell = HalfInt::from_twice(1);

  static Chart free(HalfInt ell);
  static Chart osc(HalfInt ell);

  /// L = ell + 1/2, the number of space variables.
  int space_dim() const { return static_cast<int>((ell.twice() + 1) / 2); }
  int nvars() const { return space_dim() + 1; }
  bool operator==(const Chart&) const = default;
};

using Exponents = std::vector<int>;

struct TermKey {
  HalfInt expS;
  Exponents var;
  Exponents der;
  auto operator<=>(const TermKey&) const = default;
};

class WeylOp {
 public:
  using Terms = std::map<TermKey, CScalar>;

  explicit WeylOp(Chart chart) : chart_(chart) {}

  static WeylOp constant(Chart chart, const CScalar& value);
  /// Multiplication by the variable at index i (1..L, or 0 = t in the Free chart).
  static WeylOp variable(Chart chart, int i);
  /// Derivative with respect to the variable at index i (0 = t or s).
  static WeylOp derivative(Chart chart, int i);
  /// Multiplication by exp(mu s); Osc chart only.
  static WeylOp exp_s(Chart chart, HalfInt mu);
  static WeylOp monomial(Chart chart, const CScalar& coef, HalfInt expS, Exponents var, Exponents der);

  const Chart& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the given normal-ordered monomial.
  CScalar coefficient(const TermKey& key) const;
  /// True if no term carries a derivative.
  bool is_multiplication() const;
  int max_derivative_order() const;

  void add_term(TermKey key, const CScalar& coef);

  WeylOp operator-() const;
  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  WeylOp operator*(const CScalar& s) const;
  friend WeylOp operator*(const CScalar& s, const WeylOp& op) { return op * s; }

  bool operator==(const WeylOp& o) const { return chart_ == o.chart_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void check_chart(const WeylOp& o) const;
  // add_term without the invariant checks, for keys built from valid terms.
  void accumulate(const TermKey& key, const CScalar& coef);
  Chart chart_;
  Terms terms_;
};

WeylOp commutator(const WeylOp& a, const WeylOp& b);
WeylOp anticommutator(const WeylOp& a, const WeylOp& b);
WeylOp power(const WeylOp& a, int n);

/// Algebra homomorphism fixed by the images of the source chart generators.
/// For an Osc source the weight exp(s/2) and its inverse need images too.
class Substitution {
 public:
  /// Validates the defining relations of the images; throws RelationViolation.
  Substitution(Chart source, Chart target, std::vector<WeylOp> var_images,
               std::vector<WeylOp> der_images, std::optional<WeylOp> exp_half = std::nullopt,
               std::optional<WeylOp> exp_neg_half = std::nullopt);

  static Substitution identity(Chart chart);

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  WeylOp operator()(const WeylOp& op) const;

 private:
  Chart source_;
  Chart target_;
  std::vector<WeylOp> vars_;
  std::vector<WeylOp> ders_;
  std::optional<WeylOp> exp_half_;
  std::optional<WeylOp> exp_neg_half_;
};

/// Weight q for the conjugation exp(-q) A exp(q).
struct Weight {
  enum class Kind { Gaussian, LinearS };
  Kind kind = Kind::Gaussian;
  CScalar kappa;     // Gaussian: q = kappa * x_1^2 / 2
  Rational delta;    // LinearS:  q = delta * s
  static Weight gaussian(CScalar kappa) { return {Kind::Gaussian, std::move(kappa), Rational(0)}; }
  static Weight linear_s(Rational delta) { return {Kind::LinearS, CScalar(), std::move(delta)}; }
};

/// exp(-q) A exp(q), i.e. d_{x_1} -> d_{x_1} + kappa x_1 or d_s -> d_s + delta.
WeylOp conjugate(const WeylOp& a, const Weight& q);

/// Degree r with [z0, a] = r a, or nullopt when a is zero or not homogeneous.
std::optional<HalfInt> degree_of(const WeylOp& a, const WeylOp& z0);

// ---------------------------------------------------------------------------

struct FuncKey {
  HalfInt expS;
  Exponents pow;
  auto operator<=>(const FuncKey&) const = default;
};

/// sum_k coef_k exp(mu_k s) x^{pow_k} * exp(kappa x_1^2), one kappa per function.
class GaussFunc {
 public:
  using Terms = std::map<FuncKey, CScalar>;

  GaussFunc(Chart chart, CScalar kappa) : chart_(chart), kappa_(std::move(kappa)) {}
  /// exp(mu s) * exp(kappa x_1^2).
  static GaussFunc gaussian(Chart chart, const CScalar& kappa, HalfInt mu = HalfInt());
  static GaussFunc monomial(Chart chart, const CScalar& kappa, const CScalar& coef, HalfInt mu, Exponents pow);

  const Chart& chart() const { return chart_; }
  const CScalar& kappa() const { return kappa_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(FuncKey key, const CScalar& coef);

  GaussFunc operator+(const GaussFunc& o) const;
  GaussFunc operator-(const GaussFunc& o) const;
  GaussFunc operator*(const CScalar& s) const;
  bool operator==(const GaussFunc& o) const {
    return chart_ == o.chart_ && kappa_ == o.kappa_ && terms_ == o.terms_;
  }

  /// lambda with *this == lambda * other, if such a CScalar exists.
  std::optional<CScalar> ratio_to(const GaussFunc& other) const;

  std::string to_string() const;

 private:
  void check_compatible(const GaussFunc& o) const;
  Chart chart_;
  CScalar kappa_;
  Terms terms_;
};

GaussFunc apply(const WeylOp& a, const GaussFunc& f);

}  // namespace cga
