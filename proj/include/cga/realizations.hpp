#pragma once

// Realized generators of the centrally extended conformal Galilei algebra in
// both charts, and extraction of structure constants from a realization.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cga/weyl.hpp"

namespace cga {

struct GenLabel {
  enum class Kind { ZPlus, ZZero, ZMinus, W, C, WW, Omega };
  Kind kind = Kind::ZZero;
  HalfInt i;  // W: j, WW: larger index, Omega: r
  HalfInt j;  // WW: smaller index

  static GenLabel z_plus() { return {Kind::ZPlus, {}, {}}; }
  static GenLabel z_zero() { return {Kind::ZZero, {}, {}}; }
  static GenLabel z_minus() { return {Kind::ZMinus, {}, {}}; }
  static GenLabel c() { return {Kind::C, {}, {}}; }
  static GenLabel w(HalfInt j) { return {Kind::W, j, {}}; }
  /// Unordered: ww(a, b) == ww(b, a).
  static GenLabel ww(HalfInt a, HalfInt b) { return a >= b ? GenLabel{Kind::WW, a, b} : GenLabel{Kind::WW, b, a}; }
  static GenLabel omega(HalfInt r) { return {Kind::Omega, r, {}}; }
  /// Parses the to_string() form.
  static GenLabel parse(const std::string& text);

  bool is_odd() const { return kind == Kind::W; }
  /// Degree under z0: +1, 0, -1, j, 0, i+j, r.
  HalfInt grading() const;
  std::string to_string() const;

  auto operator<=>(const GenLabel&) const = default;
};

using GeneratorMap = std::map<GenLabel, WeylOp>;

/// Finite linear combination of generator labels.
class AlgebraElement {
 public:
  using Coeffs = std::map<GenLabel, CScalar>;
  AlgebraElement() = default;
  static AlgebraElement single(const GenLabel& g, const CScalar& coef = CScalar(1));

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  CScalar coefficient(const GenLabel& g) const;
  void add(const GenLabel& g, const CScalar& coef);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const CScalar& s) const;
  AlgebraElement operator-() const { return *this * CScalar(-1); }
  bool operator==(const AlgebraElement& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  Coeffs coeffs_;
};

/// Sum of coef * realized operator.
WeylOp realize(const AlgebraElement& x, const GeneratorMap& gens);

enum class BracketKind { Commutator, Anticommutator };

struct StructureTable {
  std::vector<GenLabel> labels;
  std::map<std::pair<GenLabel, GenLabel>, AlgebraElement> brackets;
  std::map<std::pair<GenLabel, GenLabel>, BracketKind> kinds;

  const AlgebraElement& at(const GenLabel& a, const GenLabel& b) const { return brackets.at({a, b}); }
};

/// Expresses operators in the span of a generator set. Candidates are
/// restricted to the z0-degree of the target: eigenspaces of ad(z0) are
/// linearly independent, so the restriction loses nothing.
class SpanSolver {
 public:
  SpanSolver(const GeneratorMap& basis, const WeylOp& z0);
  /// nullopt if the target is outside the span; throws NonUniqueSolution
  /// if the basis is linearly dependent.
  std::optional<AlgebraElement> decompose(const WeylOp& target) const;
  const std::map<GenLabel, std::optional<HalfInt>>& degrees() const { return degrees_; }

 private:
  // Gauss-Jordan form of one degree sector with unit pivots, so reducing a
  // target needs no division. `exact` is false when some sector vector has
  // no unit entry left; decompose then falls back to a linear solve.
  struct Sector {
    std::vector<GenLabel> labels;
    std::vector<TermKey> pivots;
    std::vector<WeylOp::Terms> rows;
    std::vector<std::vector<CScalar>> combos;
    bool exact = true;
  };
  const Sector& sector(const std::optional<HalfInt>& deg) const;
  std::optional<AlgebraElement> solve(const std::vector<GenLabel>& cols, const WeylOp& target) const;

  const GeneratorMap* basis_;
  WeylOp z0_;
  std::map<GenLabel, std::optional<HalfInt>> degrees_;
  mutable std::map<std::optional<HalfInt>, Sector> sectors_;
};

using BracketRule = std::function<BracketKind(const GenLabel&, const GenLabel&)>;

/// Brackets of every ordered pair re-expanded in the span of `gens`.
/// Throws NotClosed naming the pair and the residual operator.
/// Entries of `reuse` whose bracket kind agrees with `rule` are copied
/// instead of recomputed.
StructureTable extract_structure(const GeneratorMap& gens, const BracketRule& rule,
                                 const StructureTable* reuse = nullptr);
StructureTable extract_structure(const GeneratorMap& gens, BracketKind kind);

/// True iff the label sets and every entry coincide.
bool verify_isomorphic_tables(const StructureTable& a, const StructureTable& b);

enum class Normalization { Section5, Section6, Section7 };
std::string to_string(Normalization n);

/// delta = (ell + 1/2)^2 / 4.
Rational delta_of(HalfInt ell);

/// Free chart generators z_{+1}, z_0, z_{-1}, w_j, c for any half-odd ell.
GeneratorMap free_generators(HalfInt ell);

/// Osc chart generators. Section7 is the general family (Gaussian weight
/// with lambda = -c/(2 ell + 1)); Section5 is the ell = 3/2 family with
/// weight c u^2 / 2. Section6 is accepted as an alias of Section5.
GeneratorMap osc_generators(HalfInt ell, Normalization norm);

/// The ell = 3/2 Free chart realization in the variables t, x = y_1, y = y_2,
/// transcribed term by term.
GeneratorMap threehalf_free_fixture();

/// The printed ell = 3/2 table of non-vanishing commutators, with all
/// other pairs zero. Covers z_{+-1}, z_0, w_{+-1/2}, w_{+-3/2}, c.
StructureTable threehalf_commutator_fixture();

/// Scaling weight of a single term: Free chart uses [t] = -1,
/// [y_a] = -(a - 1/2); Osc chart uses -mu of exp(mu s).
HalfInt term_scaling(const Chart& chart, const TermKey& key);
/// Checks every term of op carries the scaling weight r.
bool is_scaling_homogeneous(const WeylOp& op, HalfInt r);

/// The labels {z+1, z0, z-1, w_ell..w_-ell, c} in canonical order.
std::vector<GenLabel> cga_labels(HalfInt ell);

}  // namespace cga
