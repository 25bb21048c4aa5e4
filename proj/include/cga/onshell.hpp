#pragma once

// Invariant second-order operators Omega_1 (degree 1) and Omega_0 (degree 0),
// their multiplier tables [g, Omega] = f^g Omega, and off-shell centralizers.

#include <map>
#include <string>
#include <vector>

#include "cga/realizations.hpp"

namespace cga {

/// d_t + sum_a (L - a) y_a d_{y_{a+1}} - L/(2c) d_{y_1}^2 with L = ell + 1/2.
WeylOp omega1_free(HalfInt ell);
/// -t * omega1_free(ell).
WeylOp omega0_free(HalfInt ell);

/// z0 + (1/4c) ww(1/2,-1/2) - (1/4c) ww(3/2,-3/2), the ell = 3/2 abstract
/// degree 0 element.
AlgebraElement omega0_threehalf_element();
/// z+1 + (1/2c) ww(3/2,-1/2) - (1/2c) ww(1/2,1/2).
AlgebraElement omega1_threehalf_element();

/// Osc chart invariant operators: the general family for Section7, the
/// ell = 3/2 form for Section5/Section6. omega1_osc = -exp(-s) omega0_osc.
WeylOp omega0_osc(HalfInt ell, Normalization norm);
WeylOp omega1_osc(HalfInt ell, Normalization norm);

struct OmegaSolution {
  AlgebraElement element;  // coefficient of z+1 normalized to 1
  WeylOp op;
  std::size_t kernel_dim = 0;
};

/// Solves for the degree 1 even element annihilated by every w_k in the
/// Free chart. Throws NoSolution / NonUniqueSolution.
OmegaSolution solve_omega1(HalfInt ell);

/// f^g in the multiplier class of the chart: alpha t^k (Free) or
/// alpha exp(mu s) (Osc).
struct Multiplier {
  enum class Kind { Zero, Factor, Fail };
  Kind kind = Kind::Zero;
  CScalar coef;
  HalfInt power;         // k of t^k, or mu of exp(mu s)
  std::string residual;  // set for Fail
  std::string to_string(ChartKind chart) const;
  bool operator==(const Multiplier& o) const {
    return kind == o.kind && coef == o.coef && power == o.power;
  }
  static Multiplier zero() { return {}; }
  static Multiplier factor(CScalar coef, HalfInt power) { return {Kind::Factor, std::move(coef), power, {}}; }
};

struct OnShellCertificate {
  WeylOp omega;
  std::map<GenLabel, Multiplier> table;
  bool ok() const;
  /// Labels with a nonzero multiplier.
  std::map<GenLabel, Multiplier> nonzero() const;
};

/// Extracts f^g for every generator. Entries that are not proportional in
/// the multiplier class are recorded as Fail; `require` throws NotProportional
/// on the first of them instead.
OnShellCertificate certify_onshell(const WeylOp& omega, const GeneratorMap& gens, bool require = false);

/// Multiplier of one bracket, or nullopt if [g, omega] is not f * omega.
std::optional<Multiplier> extract_multiplier(const WeylOp& bracket, const WeylOp& omega);

/// [Omega_1, Omega_0] + Omega_1 (Free) and [Omega_0, Omega_1] - Omega_1 (Osc).
/// Returns the residual; zero when the relation holds.
WeylOp cross_relation_free(HalfInt ell);
WeylOp cross_relation_osc(HalfInt ell, Normalization norm);

/// Generators with vanishing commutator with omega.
std::vector<GenLabel> offshell_centralizer(const WeylOp& omega, const GeneratorMap& gens);

}  // namespace cga
