#pragma once

// The ell-oscillator Hamiltonian, its Gaussian vacuum, ladder eigenstates and
// an independent triangular matrix computation of the spectrum.
//
// Section7: H = 2 Omega_0 - 2 z_0 in the general oscillator realization,
//           E = sum_a (2a - 1) n_a + (ell + 1/2)^2 / 2.
// Section6: ell = 3/2 only, H = Omega_0 - z_0 in the Section5 realization,
//           E = 3/2 m + 1/2 n + 1 with psi_{m,n} = w_{-3/2}^m w_{-1/2}^n psi_vac.

#include <map>
#include <string>
#include <vector>

#include "cga/realizations.hpp"

namespace cga {

/// Oscillator-chart generators and invariant operator obtained by
/// transforming the Free chart realization.
struct OscSystem {
  HalfInt ell;
  Normalization norm = Normalization::Section7;
  GeneratorMap gens;
  WeylOp omega0;
  WeylOp hamiltonian;
  GaussFunc vacuum;
  Rational vacuum_energy;
};

/// Section6 requires ell = 3/2 (NormalizationUnavailable otherwise);
/// Section5 is accepted as Section6. Throws Mismatch if H contains d_s or
/// exp(mu s), or if the vacuum conditions fail.
const OscSystem& osc_system(HalfInt ell, Normalization norm);

WeylOp hamiltonian(HalfInt ell, Normalization norm);
/// Coefficients re-expressed through m with c = -(2 ell + 1) m.
WeylOp to_m_form(const WeylOp& h, HalfInt ell);
/// The printed ell-oscillator Hamiltonian, coefficients in m.
WeylOp printed_hamiltonian_m_form(HalfInt ell);

GaussFunc vacuum(HalfInt ell, Normalization norm);

struct SpectrumRecord {
  std::vector<int> n;   // Section7: n_1..n_L; Section6: (m, n)
  Rational energy;
  GaussFunc state;
  bool verified = false;  // H state = energy state exactly
};

/// Energy predicted by the closed formula.
Rational predicted_energy(HalfInt ell, Normalization norm, const std::vector<int>& n);

SpectrumRecord ladder_state(HalfInt ell, Normalization norm, const std::vector<int>& n);

/// Every multi-index with total at most max_total, in lexicographic order.
std::vector<SpectrumRecord> ladder_spectrum(HalfInt ell, Normalization norm, int max_total);

struct LadderReport {
  std::vector<std::string> failures;
  /// [w_{-i}, w_{-j}] for i < j, as operator strings ("0" when they commute).
  std::map<std::pair<HalfInt, HalfInt>, std::string> lowering_commutators;
  bool ok() const { return failures.empty(); }
};

/// [H, w_{+-j}] = -+ k j w_{+-j} (k = 2 for Section7, 1 for Section6),
/// [Omega_0, w_{+-j}] = 0 and [z_0, H] = 0.
LadderReport ladder_relations(HalfInt ell, Normalization norm);

struct ExactMatrix {
  std::vector<Exponents> basis;  // u-exponents, index 0 unused
  std::vector<std::vector<CScalar>> entries;  // entries[row][col]: coefficient of basis[row] in H basis[col]
  std::vector<Rational> diagonal;
};

/// H conjugated by the vacuum Gaussian acting on u-monomials of total degree
/// at most max_degree. Throws NotTriangular or DiagonalDependsOnC.
ExactMatrix matrix_oracle(HalfInt ell, int max_degree);

/// Weighted degree sum_a a n_a.
int weighted_degree(const Exponents& n);

struct ReductionReport {
  WeylOp restricted;  // H on functions of u_1 alone
  Rational constant;
};

/// Throws Inconsistent if H does not preserve functions of u_1 alone or the
/// restriction is not the harmonic oscillator plus a constant.
ReductionReport harmonic_reduction(HalfInt ell);

/// The printed ell = 3/2 eigenstates with their energies, in the order
/// (0,0), (0,1), (0,2), (1,0), (0,3), (1,1), (0,4).
struct PrintedState {
  int m;
  int n;
  Rational energy;
  GaussFunc state;
};
std::vector<PrintedState> printed_threehalf_states();

/// (1/2c)(w_{-1/2} w_{1/2} - w_{-3/2} w_{3/2}) + 1 - H in the Section6 system.
WeylOp section6_hamiltonian_residual();

}  // namespace cga
