// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "cga/enlarged.hpp"
#include "cga/onshell.hpp"
#include "cga/spectrum.hpp"
#include "cga/transform.hpp"
#include "support.hpp"

using namespace cga;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

HalfInt half(int twice) { return HalfInt::from_twice(twice); }
CScalar cs(long n, long d = 1, int k = 0) { return CScalar::monomial(Rational(n, d), k); }

std::vector<HalfInt> ells(int max_twice) {
  std::vector<HalfInt> out;
  for (int t = 1; t <= max_twice; t += 2) out.push_back(half(t));
  return out;
}

// Commutators of the ell = 3/2 algebra, written out pair by pair.
void criterion_structure(Outcome& o) {
  using G = GenLabel;
  const HalfInt h = half(1), h3 = half(3);
  std::map<std::pair<G, G>, AlgebraElement> printed;
  auto put = [&](const G& a, const G& b, const G& r, const CScalar& k) {
    printed[{a, b}] = AlgebraElement::single(r, k);
    printed[{b, a}] = AlgebraElement::single(r, -k);
  };
  put(G::z_plus(), G::z_minus(), G::z_zero(), cs(2));
  put(G::z_zero(), G::z_plus(), G::z_plus(), cs(1));
  put(G::z_zero(), G::z_minus(), G::z_minus(), cs(-1));
  put(G::z_zero(), G::w(h3), G::w(h3), cs(3, 2));
  put(G::z_zero(), G::w(-h3), G::w(-h3), cs(-3, 2));
  put(G::z_zero(), G::w(h), G::w(h), cs(1, 2));
  put(G::z_zero(), G::w(-h), G::w(-h), cs(-1, 2));
  put(G::z_plus(), G::w(h), G::w(h3), cs(1));
  put(G::z_minus(), G::w(-h), G::w(-h3), cs(1));
  put(G::z_plus(), G::w(-h), G::w(h), cs(2));
  put(G::z_minus(), G::w(h), G::w(-h), cs(2));
  put(G::z_plus(), G::w(-h3), G::w(-h), cs(3));
  put(G::z_minus(), G::w(h3), G::w(h), cs(3));
  put(G::w(h), G::w(-h), G::c(), cs(1));
  put(G::w(h3), G::w(-h3), G::c(), cs(-3));

  const StructureTable t = extract_structure(free_generators(h3), BracketKind::Commutator);
  o.expect(t.labels.size() == 8, "expected 8 generators");
  for (const auto& a : t.labels)
    for (const auto& b : t.labels) {
      const auto it = printed.find({a, b});
      const AlgebraElement want = it == printed.end() ? AlgebraElement() : it->second;
      o.expect(t.at(a, b) == want, "[" + a.to_string() + ", " + b.to_string() + "] = " + t.at(a, b).to_string());
    }
  o.expect(t.at(G::w(h3), G::w(-h3)) == AlgebraElement::single(G::c(), cs(-3)), "[w(3/2), w(-3/2)] != -3c");
}

void criterion_dimensions(Outcome& o) {
  for (HalfInt ell : ells(9)) {
    const Rational l = ell.to_rational();
    const std::string at = " at ell " + ell.to_string();
    const EnlargedBasis b = build_enlarged(free_generators(ell));
    const JacobiOptions opts = default_jacobi_options(ell);
    o.expect(opts.exhaustive == (ell <= half(3)), "Jacobi mode" + at);
    if (!opts.exhaustive) o.expect(opts.samples == 500 && !opts.targeted.empty(), "Jacobi sampling" + at);
    const DualityReport r = duality_report(b, opts);
    o.expect(Rational(static_cast<long>(r.even_dim)) == Rational(2) * l * l + Rational(3) * l + Rational(5), "even dim" + at);
    o.expect(Rational(static_cast<long>(r.odd_dim)) == Rational(2) * l + Rational(1), "odd dim" + at);
    o.expect(Rational(static_cast<long>(r.ecga_dim)) == Rational(2) * l * l + Rational(5) * l + Rational(6), "ecga dim" + at);
    o.expect(r.ok() && r.jacobi_failures.empty(), "closure or Jacobi" + at);
    o.expect(r.ecga_triples > 0 && r.scga_triples > 0, "no triples checked" + at);
  }
}

void criterion_onshell(Outcome& o) {
  using M = Multiplier;
  const HalfInt one = HalfInt::from_int(1);
  const std::map<GenLabel, Multiplier> expected{{GenLabel::z_minus(), M::factor(cs(2), one)},
                                                {GenLabel::z_zero(), M::factor(cs(1), {})}};
  for (HalfInt ell : ells(9)) {
    const std::string at = " at ell " + ell.to_string();
    const GeneratorMap g = free_generators(ell);
    const OnShellCertificate cert = certify_onshell(omega1_free(ell), g);
    o.expect(cert.ok() && cert.nonzero() == expected, "multiplier table" + at);
    o.expect(cert.table.size() == g.size(), "table does not cover every generator" + at);
    const OmegaSolution s = solve_omega1(ell);
    o.expect(s.kernel_dim == 1 && s.op == omega1_free(ell), "solver" + at);
  }
  const HalfInt h3 = half(3);
  const EnlargedBasis b = build_enlarged(free_generators(h3));
  const WeylOp om1 = realize(omega1_threehalf_element(), b.realized);
  const WeylOp t = WeylOp::variable(om1.chart(), 0);
  o.expect(om1 == omega1_free(h3), "abstract omega1");
  o.expect(realize(omega0_threehalf_element(), b.realized) == -(t * om1), "abstract omega0 != -t omega1");
}

void criterion_transform(Outcome& o) {
  const TransformReport r5 = certify_transform(half(3), Normalization::Section5);
  o.expect(r5.ok() && r5.matched.size() == 8, "Section5 at ell 3/2");
  for (HalfInt ell : ells(7)) {
    const TransformReport r = certify_transform(ell, Normalization::Section7);
    o.expect(r.ok() && r.matched.size() == free_generators(ell).size(), "Section7 at ell " + ell.to_string());
  }
}

// Rows built from the printed pattern: -(1/2m) d_1^2 + (m/2) u_1^2
// + sum_{a>=2} (2a - 1) u_a d_a - sum_a (2L - 2a) u_a d_{a+1} + constant.
void criterion_hamiltonian(Outcome& o) {
  const Rational constants[] = {Rational(0), Rational(3, 2), Rational(4), Rational(15, 2), Rational(12)};
  for (HalfInt ell : ells(9)) {
    const Chart ch = Chart::osc(ell);
    const int L = ch.space_dim();
    auto u = [&](int a) { return WeylOp::variable(ch, a); };
    auto d = [&](int a) { return WeylOp::derivative(ch, a); };
    WeylOp row = d(1) * d(1) * cs(-1, 2, -1) + u(1) * u(1) * cs(1, 2, 1);
    for (int a = 2; a <= L; ++a) row += u(a) * d(a) * cs(2 * a - 1);
    for (int a = 1; a < L; ++a) row -= u(a) * d(a + 1) * cs(2 * L - 2 * a);
    row += WeylOp::constant(ch, CScalar(constants[L - 1]));
    o.expect(to_m_form(hamiltonian(ell, Normalization::Section7), ell) == row, "row for ell " + ell.to_string());
  }
}

void criterion_spectrum(Outcome& o) {
  for (HalfInt ell : ells(9)) {
    const std::string at = " at ell " + ell.to_string();
    const int L = Chart::osc(ell).space_dim();
    std::vector<Rational> ladder;
    for (const SpectrumRecord& r : ladder_spectrum(ell, Normalization::Section7, 6)) {
      Rational e = Rational(1, 2) * (ell.to_rational() + Rational(1, 2)) * (ell.to_rational() + Rational(1, 2));
      for (int a = 1; a <= L; ++a) e += Rational(2 * a - 1) * Rational(r.n[a - 1]);
      o.expect(r.verified && r.energy == e, "ladder state" + at);
      ladder.push_back(r.energy);
    }
    const ExactMatrix m = matrix_oracle(ell, 6);
    for (std::size_t i = 0; i < m.basis.size(); ++i) o.expect(m.entries[i][i].is_constant(), "diagonal depends on c" + at);
    std::vector<Rational> diag = m.diagonal;
    std::sort(diag.begin(), diag.end());
    std::sort(ladder.begin(), ladder.end());
    o.expect(diag == ladder, "matrix diagonal multiset" + at);
  }
}

// The seven printed eigenstates, as e^{mu s} p(u, v) e^{c u^2 / 2}.
void criterion_printed_states(Outcome& o) {
  const HalfInt h3 = half(3);
  const Chart ch = Chart::osc(h3);
  struct Term {
    long coef;
    int cpow, u, v;
  };
  struct State {
    int m, n;
    int twice_energy;  // also the s-weight of the state
    std::vector<Term> poly;
  };
  const std::vector<State> states{
      {0, 0, 2, {{1, 0, 0, 0}}},
      {0, 1, 3, {{1, 1, 1, 0}}},
      {0, 2, 4, {{2, 1, 0, 0}, {1, 2, 2, 0}}},
      {1, 0, 5, {{3, 1, 1, 0}, {-3, 1, 0, 1}}},
      {0, 3, 5, {{6, 2, 1, 0}, {1, 3, 3, 0}}},
      {1, 1, 6, {{3, 1, 0, 0}, {3, 2, 2, 0}, {-3, 2, 1, 1}}},
      {0, 4, 6, {{12, 2, 0, 0}, {12, 3, 2, 0}, {1, 4, 4, 0}}},
  };
  std::size_t at_five_half = 0;
  for (const State& s : states) {
    const std::string which = " for (" + std::to_string(s.m) + ", " + std::to_string(s.n) + ")";
    const HalfInt mu = HalfInt::from_twice(s.twice_energy);
    const Rational energy(s.twice_energy, 2);
    GaussFunc printed(ch, cs(1, 2, 1));
    for (const Term& t : s.poly) printed.add_term(FuncKey{mu, {0, t.u, t.v}}, cs(t.coef, 1, t.cpow));
    const SpectrumRecord r = ladder_state(h3, Normalization::Section6, {s.m, s.n});
    o.expect(r.verified && r.energy == energy, "energy" + which);
    o.expect(r.state.ratio_to(printed).has_value(), "state not proportional" + which);
    const OscSystem& sys = osc_system(h3, Normalization::Section6);
    o.expect(apply(sys.hamiltonian, printed) == printed * CScalar(energy), "printed state not an eigenfunction" + which);
    at_five_half += s.twice_energy == 5;
  }
  o.expect(at_five_half == 2, "degeneracy at 5/2");
  std::size_t enumerated = 0;
  for (const SpectrumRecord& r : ladder_spectrum(h3, Normalization::Section6, 4))
    enumerated += r.energy == Rational(5, 2);
  o.expect(enumerated == 2, "enumerated degeneracy at 5/2");

  const OscSystem& sys = osc_system(h3, Normalization::Section6);
  o.expect(sys.vacuum_energy == Rational(1), "vacuum energy");
  auto w = [&](int twice) { return sys.gens.at(GenLabel::w(half(twice))); };
  const WeylOp combo = (w(-1) * w(1) - w(-3) * w(3)) * cs(1, 2, -1) + WeylOp::constant(ch, CScalar(1));
  o.expect(combo == sys.hamiltonian, "Hamiltonian identity");
}

void criterion_reduction(Outcome& o) {
  const Rational constants[] = {Rational(0), Rational(3, 2), Rational(4), Rational(15, 2), Rational(12)};
  for (HalfInt ell : ells(9)) {
    const Chart ch = Chart::osc(ell);
    const int L = ch.space_dim();
    const ReductionReport r = harmonic_reduction(ell);
    const WeylOp u = WeylOp::variable(ch, 1), d = WeylOp::derivative(ch, 1);
    // -(1/2m) d^2 + (m/2) u^2 with m = -c / (2L).
    const WeylOp expected = d * d * cs(L, 1, -1) - u * u * cs(1, 4 * L, 1) + WeylOp::constant(ch, CScalar(constants[L - 1]));
    o.expect(r.restricted == expected && r.constant == constants[L - 1], "reduction at ell " + ell.to_string());
  }
}

void criterion_properties(Outcome& o) {
  for (const auto& r : {testing::check_associativity(101, 150), testing::check_jacobi(202, 150),
                        testing::check_substitution(303, 150), testing::check_apply(404, 150)}) {
    o.expect(r.instances >= 100, r.name + " has too few instances");
    o.expect(r.failures == 0, r.name + ": " + std::to_string(r.failures) + " failures");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"ell 3/2 structure constants", criterion_structure},
      {"dimension counts and closure", criterion_dimensions},
      {"degree 1 on-shell certificate", criterion_onshell},
      {"transform certification", criterion_transform},
      {"Hamiltonian table", criterion_hamiltonian},
      {"spectrum two ways", criterion_spectrum},
      {"ell 3/2 eigenstates", criterion_printed_states},
      {"harmonic reduction", criterion_reduction},
      {"engine properties", criterion_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first;
    if (!o.ok) std::cout << ": " << o.why.str();
    std::cout << "\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
