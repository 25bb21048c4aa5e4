#include "cga/spectrum.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "cga/onshell.hpp"
#include "cga/transform.hpp"

namespace cga {

namespace {

const HalfInt kThreeHalf = HalfInt::from_twice(3);

Normalization canonical(Normalization norm) {
  return norm == Normalization::Section5 ? Normalization::Section6 : norm;
}

bool is_section6(Normalization norm) { return canonical(norm) == Normalization::Section6; }

HalfInt j_of(int a) { return HalfInt::from_twice(2 * a - 1); }

OscSystem build_system(HalfInt ell, Normalization norm) {
  const TransformSpec spec = TransformSpec::for_normalization(ell, norm);
  const Chart ch = Chart::osc(ell);
  const int L = ch.space_dim();
  const bool s6 = is_section6(norm);

  OscSystem sys{ell, canonical(norm), {}, WeylOp(ch), WeylOp(ch), GaussFunc(ch, CScalar()), Rational(0)};
  for (const auto& [g, op] : free_generators(ell)) sys.gens.emplace(g, transform(op, spec));
  sys.omega0 = transform(omega0_free(ell), spec);
  const WeylOp& z0 = sys.gens.at(GenLabel::z_zero());
  sys.hamiltonian = s6 ? sys.omega0 - z0 : (sys.omega0 - z0) * CScalar(2);
  for (const auto& [key, coef] : sys.hamiltonian.terms())
    if (key.expS != HalfInt() || key.der[0] != 0)
      throw Mismatch("Hamiltonian depends on s: " + sys.hamiltonian.to_string());

  if (s6) {
    sys.vacuum = GaussFunc::gaussian(ch, CScalar::monomial(Rational(1, 2), 1), HalfInt::from_int(1));
    sys.vacuum_energy = Rational(1);
  } else {
    sys.vacuum = GaussFunc::gaussian(ch, CScalar::monomial(Rational(1, 2 * (2 * L)), 1));
    sys.vacuum_energy = Rational(L * L, 2);
  }
  for (int a = 1; a <= L; ++a)
    if (!apply(sys.gens.at(GenLabel::w(j_of(a))), sys.vacuum).is_zero())
      throw Mismatch("w(" + j_of(a).to_string() + ") does not annihilate the vacuum");
  const GaussFunc expected = sys.vacuum * CScalar(sys.vacuum_energy);
  if (!(apply(sys.hamiltonian, sys.vacuum) == expected)) throw Mismatch("vacuum is not an eigenfunction of H");
  if (s6 && !(apply(-z0, sys.vacuum) == expected)) throw Mismatch("vacuum is not an eigenfunction of -z0");
  return sys;
}

// Lowering operator applied at position a of the multi-index (1-based over
// the space index; Section6 (m, n) maps to (n_1, n_2) = (n, m)).
std::vector<int> as_space_index(Normalization norm, const std::vector<int>& n) {
  if (is_section6(norm)) return {n.at(1), n.at(0)};
  return n;
}

}  // namespace

const OscSystem& osc_system(HalfInt ell, Normalization norm) {
  require_half_odd(ell);
  static std::map<std::pair<std::int64_t, int>, OscSystem> cache;
  const auto key = std::make_pair(ell.twice(), static_cast<int>(canonical(norm)));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_system(ell, norm)).first;
  return it->second;
}

WeylOp hamiltonian(HalfInt ell, Normalization norm) { return osc_system(ell, norm).hamiltonian; }

WeylOp to_m_form(const WeylOp& h, HalfInt ell) {
  WeylOp out(h.chart());
  const Rational factor(-(ell.twice() + 1));
  for (const auto& [key, coef] : h.terms()) out.add_term(key, coef.rescale_symbol(factor));
  return out;
}

WeylOp printed_hamiltonian_m_form(HalfInt ell) {
  struct Row {
    std::vector<int> diag;  // coefficient of u_a d_a, a = 2..L
    std::vector<int> off;   // minus the coefficient of u_a d_{a+1}, a = 1..L-1
    Rational constant;
  };
  static const std::map<std::int64_t, Row> rows{
      {1, {{}, {}, Rational(0)}},
      {3, {{3}, {2}, Rational(3, 2)}},
      {5, {{3, 5}, {4, 2}, Rational(4)}},
      {7, {{3, 5, 7}, {6, 4, 2}, Rational(15, 2)}},
      {9, {{3, 5, 7, 9}, {8, 6, 4, 2}, Rational(12)}},
  };
  require_half_odd(ell);
  const auto it = rows.find(ell.twice());
  if (it == rows.end()) throw std::out_of_range("no printed Hamiltonian for ell = " + ell.to_string());
  const Chart ch = Chart::osc(ell);
  auto u = [&](int a) { return WeylOp::variable(ch, a); };
  auto d = [&](int a) { return WeylOp::derivative(ch, a); };
  WeylOp h = d(1) * d(1) * CScalar::monomial(Rational(-1, 2), -1) + u(1) * u(1) * CScalar::monomial(Rational(1, 2), 1);
  for (std::size_t k = 0; k < it->second.diag.size(); ++k) {
    const int a = static_cast<int>(k) + 2;
    h += u(a) * d(a) * CScalar(it->second.diag[k]);
  }
  for (std::size_t k = 0; k < it->second.off.size(); ++k) {
    const int a = static_cast<int>(k) + 1;
    h -= u(a) * d(a + 1) * CScalar(it->second.off[k]);
  }
  h += WeylOp::constant(ch, CScalar(it->second.constant));
  return h;
}

GaussFunc vacuum(HalfInt ell, Normalization norm) { return osc_system(ell, norm).vacuum; }

Rational predicted_energy(HalfInt ell, Normalization norm, const std::vector<int>& n) {
  if (is_section6(norm)) return Rational(3, 2) * Rational(n.at(0)) + Rational(1, 2) * Rational(n.at(1)) + Rational(1);
  const int L = Chart::osc(ell).space_dim();
  Rational e(L * L, 2);
  for (int a = 1; a <= L; ++a) e += Rational(2 * a - 1) * Rational(n.at(a - 1));
  return e;
}

namespace {

// Memoized ladder words. Section7 applies w_{-1/2}^{n_1} ... w_{-ell}^{n_L}
// (w_{-ell} innermost); Section6 applies w_{-3/2}^m w_{-1/2}^n (w_{-1/2}
// innermost).
class LadderCache {
 public:
  explicit LadderCache(const OscSystem& sys) : sys_(&sys), low_outside_(!is_section6(sys.norm)) {
    const int L = Chart::osc(sys.ell).space_dim();
    const CScalar weight = sys.vacuum.kappa() * CScalar(2);
    for (int a = 1; a <= L; ++a)
      lowering_.push_back(conjugate(sys.gens.at(GenLabel::w(-j_of(a))), Weight::gaussian(weight)));
    GaussFunc base(sys.vacuum.chart(), CScalar());
    for (const auto& [k, c] : sys.vacuum.terms()) base.add_term(k, c);
    states_.emplace(std::vector<int>(L, 0), std::move(base));
  }

  // Polynomial part only (kappa = 0).
  const GaussFunc& poly(const std::vector<int>& n) {
    auto it = states_.find(n);
    if (it != states_.end()) return it->second;
    std::size_t a = 0;
    if (low_outside_) {
      while (n[a] == 0) ++a;
    } else {
      a = n.size() - 1;
      while (n[a] == 0) --a;
    }
    std::vector<int> prev = n;
    --prev[a];
    GaussFunc next = apply(lowering_[a], poly(prev));
    return states_.emplace(n, std::move(next)).first->second;
  }

  GaussFunc full(const std::vector<int>& n) {
    const GaussFunc& p = poly(n);
    GaussFunc out(p.chart(), sys_->vacuum.kappa());
    for (const auto& [k, c] : p.terms()) out.add_term(k, c);
    return out;
  }

 private:
  const OscSystem* sys_;
  bool low_outside_;
  std::vector<WeylOp> lowering_;
  std::map<std::vector<int>, GaussFunc> states_;
};

LadderCache& ladder_cache(HalfInt ell, Normalization norm) {
  static std::map<std::pair<std::int64_t, int>, LadderCache> caches;
  const auto key = std::make_pair(ell.twice(), static_cast<int>(canonical(norm)));
  auto it = caches.find(key);
  if (it == caches.end()) it = caches.emplace(key, LadderCache(osc_system(ell, norm))).first;
  return it->second;
}

}  // namespace

SpectrumRecord ladder_state(HalfInt ell, Normalization norm, const std::vector<int>& n) {
  const OscSystem& sys = osc_system(ell, norm);
  const std::size_t expected = is_section6(norm) ? 2 : static_cast<std::size_t>(Chart::osc(ell).space_dim());
  if (n.size() != expected)
    throw std::invalid_argument("multi-index needs " + std::to_string(expected) + " entries");
  if (std::any_of(n.begin(), n.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("multi-index entries must be non-negative");

  SpectrumRecord rec{n, predicted_energy(ell, norm, n), ladder_cache(ell, norm).full(as_space_index(norm, n)), false};
  const GaussFunc target = rec.state * CScalar(rec.energy);
  rec.verified = !rec.state.is_zero() && apply(sys.hamiltonian, rec.state) == target;
  if (rec.verified && is_section6(norm))
    rec.verified = apply(-sys.gens.at(GenLabel::z_zero()), rec.state) == target;
  return rec;
}

std::vector<SpectrumRecord> ladder_spectrum(HalfInt ell, Normalization norm, int max_total) {
  const std::size_t len = is_section6(norm) ? 2 : static_cast<std::size_t>(Chart::osc(ell).space_dim());
  std::vector<SpectrumRecord> out;
  std::vector<int> n(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == len) {
      out.push_back(ladder_state(ell, norm, n));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[pos] = v;
      rec(pos + 1, left - v);
    }
    n[pos] = 0;
  };
  rec(0, std::max(max_total, 0));
  return out;
}

LadderReport ladder_relations(HalfInt ell, Normalization norm) {
  const OscSystem& sys = osc_system(ell, norm);
  const int L = Chart::osc(ell).space_dim();
  const std::int64_t k = is_section6(norm) ? 1 : 2;
  const WeylOp& z0 = sys.gens.at(GenLabel::z_zero());
  LadderReport rep;
  auto check = [&](const std::string& what, const WeylOp& residual) {
    if (!residual.is_zero()) rep.failures.push_back(what + ": " + residual.to_string());
  };
  for (int a = 1; a <= L; ++a) {
    for (const HalfInt j : {j_of(a), -j_of(a)}) {
      const WeylOp& w = sys.gens.at(GenLabel::w(j));
      const Rational shift = -(j * k).to_rational();
      check("[H, w(" + j.to_string() + ")]", commutator(sys.hamiltonian, w) - w * CScalar(shift));
      check("[Omega0, w(" + j.to_string() + ")]", commutator(sys.omega0, w));
      check("[z0, w(" + j.to_string() + ")]", commutator(z0, w) - w * CScalar(j.to_rational()));
    }
  }
  check("[z0, H]", commutator(z0, sys.hamiltonian));
  if (is_section6(norm)) check("Omega0 - z0 - H", sys.omega0 - z0 - sys.hamiltonian);
  else check("2 Omega0 - 2 z0 - H", (sys.omega0 - z0) * CScalar(2) - sys.hamiltonian);

  for (int a = 1; a <= L; ++a)
    for (int b = a + 1; b <= L; ++b) {
      const WeylOp br = commutator(sys.gens.at(GenLabel::w(-j_of(a))), sys.gens.at(GenLabel::w(-j_of(b))));
      rep.lowering_commutators[{j_of(a), j_of(b)}] = br.is_zero() ? "0" : br.to_string();
    }
  return rep;
}

int weighted_degree(const Exponents& n) {
  int g = 0;
  for (std::size_t a = 1; a < n.size(); ++a) g += static_cast<int>(a) * n[a];
  return g;
}

ExactMatrix matrix_oracle(HalfInt ell, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
  const OscSystem& sys = osc_system(ell, Normalization::Section7);
  const Chart ch = sys.hamiltonian.chart();
  const int L = ch.space_dim();
  const WeylOp h = conjugate(sys.hamiltonian, Weight::gaussian(sys.vacuum.kappa() * CScalar(2)));

  ExactMatrix mx;
  Exponents n(ch.nvars(), 0);
  std::function<void(int, int)> gen = [&](int a, int left) {
    if (a > L) {
      mx.basis.push_back(n);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[a] = v;
      gen(a + 1, left - v);
    }
    n[a] = 0;
  };
  gen(1, max_degree);
  std::sort(mx.basis.begin(), mx.basis.end(), [](const Exponents& x, const Exponents& y) {
    const int gx = weighted_degree(x), gy = weighted_degree(y);
    return gx != gy ? gx < gy : x < y;
  });
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < mx.basis.size(); ++i) index.emplace(mx.basis[i], i);

  const std::size_t dim = mx.basis.size();
  mx.entries.assign(dim, std::vector<CScalar>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const GaussFunc image =
        apply(h, GaussFunc::monomial(ch, CScalar(), CScalar(1), HalfInt(), mx.basis[col]));
    for (const auto& [key, coef] : image.terms()) {
      const auto it = index.find(key.pow);
      std::string where = "(" + std::to_string(col) + ")";
      if (key.expS != HalfInt() || it == index.end())
        throw NotTriangular("image of basis monomial " + where + " leaves the basis");
      const std::size_t row = it->second;
      if (row != col && weighted_degree(mx.basis[row]) >= weighted_degree(mx.basis[col]))
        throw NotTriangular("entry (" + std::to_string(row) + ", " + std::to_string(col) + ") = " + coef.to_string());
      mx.entries[row][col] = coef;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const CScalar& d = mx.entries[i][i];
    if (!d.is_constant())
      throw DiagonalDependsOnC("diagonal entry " + std::to_string(i) + " = " + d.to_string());
    mx.diagonal.push_back(d.is_zero() ? Rational(0) : d.constant_term());
  }
  return mx;
}

ReductionReport harmonic_reduction(HalfInt ell) {
  const OscSystem& sys = osc_system(ell, Normalization::Section7);
  const Chart ch = sys.hamiltonian.chart();
  const int L = ch.space_dim();
  ReductionReport rep{WeylOp(ch), Rational(0)};
  for (const auto& [key, coef] : sys.hamiltonian.terms()) {
    bool kills = false;
    for (int a = 2; a <= L; ++a) kills = kills || key.der[a] > 0;
    if (kills) continue;
    for (int a = 2; a <= L; ++a)
      if (key.var[a] > 0)
        throw Inconsistent("term " + WeylOp::monomial(ch, coef, key.expS, key.var, key.der).to_string() +
                           " leaves functions of u_1");
    rep.restricted.add_term(key, coef);
  }
  const WeylOp u1 = WeylOp::variable(ch, 1);
  const WeylOp d1 = WeylOp::derivative(ch, 1);
  const WeylOp osc = d1 * d1 * CScalar::monomial(Rational(L, 1), -1) - u1 * u1 * CScalar::monomial(Rational(1, 4 * L), 1);
  const WeylOp rest = rep.restricted - osc;
  if (!rest.is_multiplication() || rest.max_derivative_order() != 0 || rest.terms().size() > 1 ||
      (!rest.is_zero() && (rest.terms().begin()->first.var != Exponents(ch.nvars(), 0) ||
                           !rest.terms().begin()->second.is_constant())))
    throw Inconsistent("restriction is not an oscillator plus a constant: " + rest.to_string());
  if (!rest.is_zero()) rep.constant = rest.terms().begin()->second.constant_term();
  return rep;
}

std::vector<PrintedState> printed_threehalf_states() {
  const Chart ch = Chart::osc(kThreeHalf);
  const CScalar kappa = CScalar::monomial(Rational(1, 2), 1);
  auto term = [&](GaussFunc& f, int coef, int cpow, HalfInt mu, int u, int v) {
    f.add_term(FuncKey{mu, {0, u, v}}, CScalar::monomial(Rational(coef), cpow));
  };
  std::vector<PrintedState> out;
  auto add = [&](int m, int n, Rational e, HalfInt mu, std::vector<std::array<int, 4>> terms) {
    GaussFunc f(ch, kappa);
    for (const auto& t : terms) term(f, t[0], t[1], mu, t[2], t[3]);
    out.push_back({m, n, e, f});
  };
  // {coef, power of c, power of u, power of v}
  add(0, 0, Rational(1), HalfInt::from_int(1), {{1, 0, 0, 0}});
  add(0, 1, Rational(3, 2), HalfInt::from_twice(3), {{1, 1, 1, 0}});
  add(0, 2, Rational(2), HalfInt::from_int(2), {{2, 1, 0, 0}, {1, 2, 2, 0}});
  add(1, 0, Rational(5, 2), HalfInt::from_twice(5), {{3, 1, 1, 0}, {-3, 1, 0, 1}});
  add(0, 3, Rational(5, 2), HalfInt::from_twice(5), {{6, 2, 1, 0}, {1, 3, 3, 0}});
  add(1, 1, Rational(3), HalfInt::from_int(3), {{3, 1, 0, 0}, {3, 2, 2, 0}, {-3, 2, 1, 1}});
  add(0, 4, Rational(3), HalfInt::from_int(3), {{12, 2, 0, 0}, {12, 3, 2, 0}, {1, 4, 4, 0}});
  return out;
}

WeylOp section6_hamiltonian_residual() {
  const OscSystem& sys = osc_system(kThreeHalf, Normalization::Section6);
  auto w = [&](int twice) { return sys.gens.at(GenLabel::w(HalfInt::from_twice(twice))); };
  const WeylOp combo = (w(-1) * w(1) - w(-3) * w(3)) * CScalar::monomial(Rational(1, 2), -1) +
                       WeylOp::constant(sys.hamiltonian.chart(), CScalar(1));
  return combo - sys.hamiltonian;
}

}  // namespace cga
