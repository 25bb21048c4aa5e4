#pragma once

// The enlarged generator set: the algebra plus all anticommutators
// w_{i,j} = {w_i, w_j}. The same realized operators close both as a Lie
// algebra of commutators and as a Z2-graded algebra of (anti)commutators.

#include <cstdint>
#include <string>
#include <vector>

#include "cga/realizations.hpp"

namespace cga {

struct EnlargedBasis {
  HalfInt ell;
  std::vector<GenLabel> even;  // z_{+1}, z_0, z_{-1}, c, every ww(i,j)
  std::vector<GenLabel> odd;   // every w(j)
  GeneratorMap realized;
};

EnlargedBasis build_enlarged(const GeneratorMap& gens);

/// Odd-odd pairs use the anticommutator, everything else the commutator.
BracketKind graded_rule(const GenLabel& a, const GenLabel& b);

struct JacobiOptions {
  bool exhaustive = true;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  /// Labels whose triples are always checked when sampling.
  std::vector<GenLabel> targeted;
};

/// Options used by the verification suites: exhaustive at ell <= 3/2,
/// seeded sample plus triples through the invariant-operator labels above.
JacobiOptions default_jacobi_options(HalfInt ell, std::uint64_t seed = 1);

struct ClosureReport {
  StructureTable table;
  std::size_t triples_checked = 0;
  std::vector<std::string> jacobi_failures;
};

/// Commutator closure of every pair plus the ordinary Jacobi identity on the
/// extracted table. Throws NotClosed or JacobiFailure.
ClosureReport verify_ecga_closure(const EnlargedBasis& basis, const JacobiOptions& opts = {});

/// Graded closure, grading check and graded Jacobi identity on the extracted
/// table. Throws NotClosed, GradingViolation or JacobiFailure.
/// A commutator table of the same basis, when given, supplies every entry
/// that is not odd-odd.
ClosureReport verify_scga_graded(const EnlargedBasis& basis, const JacobiOptions& opts = {},
                                 const StructureTable* commutators = nullptr);

/// Residual of the (graded) Jacobi identity of one triple, computed from the
/// structure table alone.
AlgebraElement jacobi_residual(const StructureTable& table, const GenLabel& a, const GenLabel& b,
                               const GenLabel& d, bool graded);

struct DualityReport {
  HalfInt ell;
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::size_t ecga_dim = 0;
  std::size_t sp_dim = 0;       // ww sector, closed under commutators
  std::size_t osp_dim = 0;      // ww + w sector, closed under graded brackets
  bool sp_closed = false;
  bool osp_closed = false;
  bool same_operators = false;  // both structures read the identical operator map
  std::size_t ecga_triples = 0;
  std::size_t scga_triples = 0;
  std::vector<std::string> jacobi_failures;
  bool ok() const { return sp_closed && osp_closed && same_operators && jacobi_failures.empty(); }
};

DualityReport duality_report(const EnlargedBasis& basis, const JacobiOptions& opts = {});

}  // namespace cga
