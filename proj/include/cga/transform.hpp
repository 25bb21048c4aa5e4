#pragma once

// The three-step map from the Free chart realization to the oscillator
// realization: change of variables t = e^s, y_a = e^{(a-1/2)s} u_a,
// dressing by t^delta, and a Gaussian similarity transformation in u_1.

#include <string>
#include <vector>

#include "cga/realizations.hpp"

namespace cga {

struct TransformSpec {
  HalfInt ell;
  Rational delta;          // t^delta g t^-delta
  CScalar gaussian_kappa;  // conjugation weight kappa u_1^2 / 2, see cga::conjugate
  Normalization normalization = Normalization::Section7;

  /// delta = (ell + 1/2)^2 / 4, kappa = lambda = -c / (2 ell + 1).
  static TransformSpec section7(HalfInt ell);
  /// ell = 3/2 only: delta = 1, dressing e^{c u^2/2} (.) e^{-c u^2/2}.
  static TransformSpec section5();
  static TransformSpec for_normalization(HalfInt ell, Normalization norm);
};

/// Chain-rule substitution Free(ell) -> Osc(ell).
Substitution change_of_variables(HalfInt ell);

WeylOp transform(const WeylOp& g, const TransformSpec& spec);

struct TransformReport {
  HalfInt ell;
  Normalization normalization = Normalization::Section7;
  std::vector<std::string> matched;     // labels reproduced exactly
  std::vector<std::string> mismatches;  // "label: residual"
  bool omegas_match = false;
  bool tables_identical = false;
  bool ok() const { return mismatches.empty() && omegas_match && tables_identical; }
};

/// Compares the transformed Free generators and invariant operators against
/// the printed oscillator realization, and the structure tables on both sides.
TransformReport certify_transform(HalfInt ell, Normalization norm);

}  // namespace cga
