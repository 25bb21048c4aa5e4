#include "cga/onshell.hpp"

#include <set>

#include "cga/enlarged.hpp"
#include "cga/linsolve.hpp"

namespace cga {

namespace {

HalfInt half() { return HalfInt::from_twice(1); }
HalfInt one() { return HalfInt::from_int(1); }

WeylOp t_power(const Chart& ch, int k) {
  Exponents var(ch.nvars(), 0);
  var[0] = k;
  return WeylOp::monomial(ch, CScalar(1), HalfInt(), var, Exponents(ch.nvars(), 0));
}

}  // namespace

WeylOp omega1_free(HalfInt ell) {
  require_half_odd(ell);
  const Chart ch = Chart::free(ell);
  const int L = ch.space_dim();
  WeylOp op = WeylOp::derivative(ch, 0);
  for (int a = 1; a < L; ++a) op += WeylOp::variable(ch, a) * WeylOp::derivative(ch, a + 1) * CScalar(L - a);
  op -= WeylOp::derivative(ch, 1) * WeylOp::derivative(ch, 1) * CScalar::monomial(Rational(L, 2), -1);
  return op;
}

WeylOp omega0_free(HalfInt ell) {
  const WeylOp om1 = omega1_free(ell);
  return -(WeylOp::variable(om1.chart(), 0) * om1);
}

AlgebraElement omega0_threehalf_element() {
  const CScalar q = CScalar::monomial(Rational(1, 4), -1);
  AlgebraElement x = AlgebraElement::single(GenLabel::z_zero());
  x.add(GenLabel::ww(half(), -half()), q);
  x.add(GenLabel::ww(HalfInt::from_twice(3), HalfInt::from_twice(-3)), -q);
  return x;
}

AlgebraElement omega1_threehalf_element() {
  const CScalar q = CScalar::monomial(Rational(1, 2), -1);
  AlgebraElement x = AlgebraElement::single(GenLabel::z_plus());
  x.add(GenLabel::ww(HalfInt::from_twice(3), -half()), q);
  x.add(GenLabel::ww(half(), half()), -q);
  return x;
}

WeylOp omega0_osc(HalfInt ell, Normalization norm) {
  require_half_odd(ell);
  const Chart ch = Chart::osc(ell);
  auto u = [&](int a) { return WeylOp::variable(ch, a); };
  auto d = [&](int a) { return WeylOp::derivative(ch, a); };

  if (norm != Normalization::Section7) {
    if (ell != HalfInt::from_twice(3))
      throw NormalizationUnavailable("normalization " + to_string(norm) + " exists only at ell = 3/2");
    WeylOp op = -d(0);
    op -= u(1) * d(2);
    op -= u(1) * d(1) * CScalar(Rational(3, 2));
    op += u(2) * d(2) * CScalar(Rational(3, 2));
    op += d(1) * d(1) * CScalar::monomial(Rational(1), -1);
    op += u(1) * u(1) * CScalar::monomial(Rational(1, 2), 1);
    return op;
  }

  const int L = ch.space_dim();
  WeylOp op = -d(0);
  for (int j = 2; j <= L; ++j) op += u(j) * d(j) * CScalar(Rational(2 * j - 1, 2));
  for (int j = 1; j < L; ++j) op -= u(j) * d(j + 1) * CScalar(L - j);
  op += d(1) * d(1) * CScalar::monomial(Rational(L, 2), -1);
  op -= u(1) * u(1) * CScalar::monomial(Rational(1, 4 * (2 * L)), 1);
  const std::int64_t l2 = ell.twice();
  op += WeylOp::constant(ch, CScalar(Rational((l2 - 1) * (l2 + 3), 16)));
  return op;
}

WeylOp omega1_osc(HalfInt ell, Normalization norm) {
  const WeylOp om0 = omega0_osc(ell, norm);
  return -(WeylOp::exp_s(om0.chart(), -one()) * om0);
}

OmegaSolution solve_omega1(HalfInt ell) {
  require_half_odd(ell);
  const GeneratorMap gens = free_generators(ell);
  const EnlargedBasis basis = build_enlarged(gens);

  std::vector<GenLabel> unknowns{GenLabel::z_plus()};
  for (auto i = half(); i <= ell; i += one())
    if (one() - i >= -ell && i >= one() - i) unknowns.push_back(GenLabel::ww(i, one() - i));

  // Rows indexed by (k, term key) of sum_m x_m [w_k, B_m].
  std::map<std::pair<GenLabel, TermKey>, std::size_t> row_of;
  Matrix a;
  for (std::size_t m = 0; m < unknowns.size(); ++m) {
    const WeylOp& bm = basis.realized.at(unknowns[m]);
    for (const auto& [g, w] : gens) {
      if (g.kind != GenLabel::Kind::W) continue;
      const WeylOp br = commutator(w, bm);
      for (const auto& [key, coef] : br.terms()) {
        auto [it, fresh] = row_of.emplace(std::make_pair(g, key), a.size());
        if (fresh) a.emplace_back(unknowns.size(), CScalar());
        a[it->second][m] = coef;
      }
    }
  }

  const auto ker = kernel(a, unknowns.size());
  if (ker.empty()) throw NoSolution("no degree 1 element commutes with every w_k");
  if (ker.size() > 1)
    throw NonUniqueSolution("solution space has dimension " + std::to_string(ker.size()));
  const auto& v = ker.front();
  if (v[0] == CScalar()) throw NoSolution("solution has no z+1 component");

  OmegaSolution sol{{}, WeylOp(Chart::free(ell)), ker.size()};
  for (std::size_t m = 0; m < unknowns.size(); ++m) {
    if (v[m] == CScalar()) continue;
    const auto q = v[m].divide_exact(v[0]);
    if (!q) throw NotLaurent("normalized coefficient of " + unknowns[m].to_string() + " is not Laurent");
    sol.element.add(unknowns[m], *q);
  }
  sol.op = realize(sol.element, basis.realized);
  return sol;
}

std::string Multiplier::to_string(ChartKind chart) const {
  if (kind == Kind::Zero) return "zero";
  if (kind == Kind::Fail) return "fail";
  std::string base;
  if (power != HalfInt()) {
    if (chart == ChartKind::Free)
      base = power == one() ? "t" : "t^" + power.to_string();
    else
      base = power == one() ? "exp(s)" : power == -one() ? "exp(-s)" : "exp(" + power.to_string() + " s)";
  }
  if (base.empty()) return coef.to_string();
  if (coef == CScalar(1)) return base;
  if (coef == CScalar(-1)) return "-" + base;
  const std::string c = coef.to_string();
  return coef.is_monomial() ? c + " " + base : "(" + c + ") " + base;
}

bool OnShellCertificate::ok() const {
  for (const auto& [g, m] : table)
    if (m.kind == Multiplier::Kind::Fail) return false;
  return true;
}

std::map<GenLabel, Multiplier> OnShellCertificate::nonzero() const {
  std::map<GenLabel, Multiplier> out;
  for (const auto& [g, m] : table)
    if (m.kind != Multiplier::Kind::Zero) out.emplace(g, m);
  return out;
}

std::optional<Multiplier> extract_multiplier(const WeylOp& bracket, const WeylOp& omega) {
  if (bracket.is_zero()) return Multiplier::zero();
  if (omega.is_zero()) return std::nullopt;
  const Chart& ch = omega.chart();
  const bool free = ch.kind == ChartKind::Free;
  const auto& [k0, w0] = *omega.terms().begin();

  std::set<std::pair<HalfInt, CScalar>> tried;
  for (const auto& [key, b] : bracket.terms()) {
    if (key.der != k0.der) continue;
    HalfInt power;
    if (free) {
      if (key.expS != k0.expS || !std::equal(key.var.begin() + 1, key.var.end(), k0.var.begin() + 1)) continue;
      power = HalfInt::from_int(key.var[0] - k0.var[0]);
    } else {
      if (key.var != k0.var) continue;
      power = key.expS - k0.expS;
    }
    const auto alpha = b.divide_exact(w0);
    if (!alpha || !tried.emplace(power, *alpha).second) continue;

    bool holds;
    if (!free) {
      holds = WeylOp::exp_s(ch, power) * omega * *alpha == bracket;
    } else {
      const int k = static_cast<int>(power.as_integer());
      holds = k >= 0 ? t_power(ch, k) * omega * *alpha == bracket
                     : t_power(ch, -k) * bracket == omega * *alpha;
    }
    if (holds) return Multiplier::factor(*alpha, power);
  }
  return std::nullopt;
}

OnShellCertificate certify_onshell(const WeylOp& omega, const GeneratorMap& gens, bool require) {
  OnShellCertificate cert{omega, {}};
  for (const auto& [g, op] : gens) {
    const WeylOp br = commutator(op, omega);
    if (auto m = extract_multiplier(br, omega)) {
      cert.table.emplace(g, *m);
      continue;
    }
    if (require) throw NotProportional(g.to_string() + ": " + br.to_string());
    Multiplier fail;
    fail.kind = Multiplier::Kind::Fail;
    fail.residual = br.to_string();
    cert.table.emplace(g, fail);
  }
  return cert;
}

WeylOp cross_relation_free(HalfInt ell) {
  const WeylOp om1 = omega1_free(ell);
  return commutator(om1, omega0_free(ell)) + om1;
}

WeylOp cross_relation_osc(HalfInt ell, Normalization norm) {
  const WeylOp om1 = omega1_osc(ell, norm);
  return commutator(omega0_osc(ell, norm), om1) - om1;
}

std::vector<GenLabel> offshell_centralizer(const WeylOp& omega, const GeneratorMap& gens) {
  std::vector<GenLabel> out;
  for (const auto& [g, op] : gens)
    if (commutator(op, omega).is_zero()) out.push_back(g);
  return out;
}

}  // namespace cga
