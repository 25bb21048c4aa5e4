#include "cga/realizations.hpp"

#include <algorithm>
#include <sstream>

#include "cga/linsolve.hpp"

namespace cga {

namespace {

HalfInt parse_half(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return HalfInt::from_int(std::stoll(s));
    if (s.substr(slash + 1) != "2") throw ParseError("bad half-integer: " + s);
    return HalfInt::from_twice(std::stoll(s.substr(0, slash)));
  } catch (const std::logic_error&) {
    throw ParseError("bad half-integer: " + s);
  }
}

// Builds sums of monomials in one chart with compact exponent lists.
struct Builder {
  Chart chart;
  WeylOp op;
  explicit Builder(Chart ch) : chart(ch), op(ch) {}
  Builder& add(const CScalar& coef, HalfInt mu, std::initializer_list<int> var, std::initializer_list<int> der) {
    Exponents v(var), d(der);
    v.resize(static_cast<std::size_t>(chart.nvars()), 0);
    d.resize(static_cast<std::size_t>(chart.nvars()), 0);
    op.add_term({mu, std::move(v), std::move(d)}, coef);
    return *this;
  }
  Builder& add(const CScalar& coef, std::initializer_list<int> var, std::initializer_list<int> der) {
    return add(coef, HalfInt(), var, der);
  }
};

Exponents unit(const Chart& ch, int index, int power = 1) {
  Exponents e(static_cast<std::size_t>(ch.nvars()), 0);
  e[static_cast<std::size_t>(index)] = power;
  return e;
}

Exponents zeros(const Chart& ch) { return Exponents(static_cast<std::size_t>(ch.nvars()), 0); }

CScalar rc(long n, long d = 1) { return CScalar(Rational(n, d)); }
CScalar cc(const Rational& r) { return CScalar::monomial(r, 1); }

}  // namespace

// ---------------------------------------------------------------------------

GenLabel GenLabel::parse(const std::string& text) {
  if (text == "z+1") return z_plus();
  if (text == "z0") return z_zero();
  if (text == "z-1") return z_minus();
  if (text == "c") return c();
  auto inner = [&](std::size_t open) {
    if (text.back() != ')') throw ParseError("bad generator label: " + text);
    return text.substr(open + 1, text.size() - open - 2);
  };
  if (text.rfind("ww(", 0) == 0) {
    const std::string body = inner(2);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("bad generator label: " + text);
    return ww(parse_half(body.substr(0, comma)), parse_half(body.substr(comma + 1)));
  }
  if (text.rfind("w(", 0) == 0) return w(parse_half(inner(1)));
  if (text.rfind("omega(", 0) == 0) return omega(parse_half(inner(5)));
  throw ParseError("bad generator label: " + text);
}

HalfInt GenLabel::grading() const {
  switch (kind) {
    case Kind::ZPlus: return HalfInt::from_int(1);
    case Kind::ZMinus: return HalfInt::from_int(-1);
    case Kind::ZZero:
    case Kind::C: return HalfInt();
    case Kind::W: return i;
    case Kind::WW: return i + j;
    case Kind::Omega: return i;
  }
  return HalfInt();
}

std::string GenLabel::to_string() const {
  switch (kind) {
    case Kind::ZPlus: return "z+1";
    case Kind::ZZero: return "z0";
    case Kind::ZMinus: return "z-1";
    case Kind::C: return "c";
    case Kind::W: return "w(" + i.to_string() + ")";
    case Kind::WW: return "ww(" + i.to_string() + "," + j.to_string() + ")";
    case Kind::Omega: return "omega(" + i.to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::single(const GenLabel& g, const CScalar& coef) {
  AlgebraElement x;
  x.add(g, coef);
  return x;
}

CScalar AlgebraElement::coefficient(const GenLabel& g) const {
  auto it = coeffs_.find(g);
  return it == coeffs_.end() ? CScalar() : it->second;
}

void AlgebraElement::add(const GenLabel& g, const CScalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(g, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.coeffs_) r.add(g, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.coeffs_) r.add(g, -c);
  return r;
}

AlgebraElement AlgebraElement::operator*(const CScalar& s) const {
  AlgebraElement r;
  for (const auto& [g, c] : coeffs_) r.add(g, c * s);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << g.to_string();
  }
  return os.str();
}

WeylOp realize(const AlgebraElement& x, const GeneratorMap& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator map");
  WeylOp out(gens.begin()->second.chart());
  for (const auto& [g, c] : x.coeffs()) out += gens.at(g) * c;
  return out;
}

// ---------------------------------------------------------------------------

SpanSolver::SpanSolver(const GeneratorMap& basis, const WeylOp& z0) : basis_(&basis), z0_(z0) {
  for (const auto& [g, op] : basis) degrees_.emplace(g, degree_of(op, z0));
}

const SpanSolver::Sector& SpanSolver::sector(const std::optional<HalfInt>& deg) const {
  auto found = sectors_.find(deg);
  if (found != sectors_.end()) return found->second;
  Sector sec;
  for (const auto& [g, d] : degrees_)
    if (!deg || !d || *d == *deg) sec.labels.push_back(g);

  const std::size_t n = sec.labels.size();
  for (std::size_t j = 0; j < n && sec.exact; ++j) {
    WeylOp::Terms row = basis_->at(sec.labels[j]).terms();
    std::vector<CScalar> combo(n);
    combo[j] = CScalar(1);
    // Reduce against the existing pivots, then pick a unit pivot.
    for (std::size_t r = 0; r < sec.rows.size(); ++r) {
      const auto it = row.find(sec.pivots[r]);
      if (it == row.end()) continue;
      const CScalar f = it->second;
      for (const auto& [k, c] : sec.rows[r]) {
        auto& slot = row[k];
        slot -= f * c;
        if (slot.is_zero()) row.erase(k);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!sec.combos[r][i].is_zero()) combo[i] -= f * sec.combos[r][i];
    }
    if (row.empty()) throw NonUniqueSolution("generator " + sec.labels[j].to_string() + " is linearly dependent");
    auto piv = std::find_if(row.begin(), row.end(), [](const auto& kv) { return kv.second.is_monomial(); });
    if (piv == row.end()) {
      sec.exact = false;
      break;
    }
    const TermKey key = piv->first;
    const CScalar inv = CScalar(1).div_monomial(piv->second);
    for (auto& [k, c] : row) c *= inv;
    for (auto& c : combo) c *= inv;
    // Clear the new pivot from the earlier rows.
    for (std::size_t r = 0; r < sec.rows.size(); ++r) {
      const auto it = sec.rows[r].find(key);
      if (it == sec.rows[r].end()) continue;
      const CScalar f = it->second;
      for (const auto& [k, c] : row) {
        auto& slot = sec.rows[r][k];
        slot -= f * c;
        if (slot.is_zero()) sec.rows[r].erase(k);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!combo[i].is_zero()) sec.combos[r][i] -= f * combo[i];
    }
    sec.pivots.push_back(key);
    sec.rows.push_back(std::move(row));
    sec.combos.push_back(std::move(combo));
  }
  return sectors_.emplace(deg, std::move(sec)).first->second;
}

std::optional<AlgebraElement> SpanSolver::decompose(const WeylOp& target) const {
  if (target.is_zero()) return AlgebraElement();
  const Sector& sec = sector(degree_of(target, z0_));
  if (sec.labels.empty()) return std::nullopt;
  if (!sec.exact) return solve(sec.labels, target);

  WeylOp::Terms rest = target.terms();
  std::vector<CScalar> x(sec.labels.size());
  for (std::size_t r = 0; r < sec.rows.size(); ++r) {
    const auto it = rest.find(sec.pivots[r]);
    if (it == rest.end()) continue;
    const CScalar f = it->second;
    for (const auto& [k, c] : sec.rows[r]) {
      auto& slot = rest[k];
      slot -= f * c;
      if (slot.is_zero()) rest.erase(k);
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!sec.combos[r][i].is_zero()) x[i] += f * sec.combos[r][i];
  }
  if (!rest.empty()) return std::nullopt;
  AlgebraElement out;
  for (std::size_t j = 0; j < x.size(); ++j) out.add(sec.labels[j], x[j]);
  return out;
}

std::optional<AlgebraElement> SpanSolver::solve(const std::vector<GenLabel>& cols, const WeylOp& target) const {
  std::map<TermKey, std::size_t> rows;
  auto index_terms = [&](const WeylOp& op) {
    for (const auto& [k, _] : op.terms()) rows.try_emplace(k, rows.size());
  };
  index_terms(target);
  for (const auto& g : cols) index_terms(basis_->at(g));

  Matrix a(rows.size(), std::vector<CScalar>(cols.size()));
  std::vector<CScalar> b(rows.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : basis_->at(cols[j]).terms()) a[rows.at(k)][j] = c;
  for (const auto& [k, c] : target.terms()) b[rows.at(k)] = c;

  std::vector<CScalar> x;
  try {
    x = solve_unique(a, b);
  } catch (const NoSolution&) {
    return std::nullopt;
  }
  AlgebraElement out;
  for (std::size_t j = 0; j < cols.size(); ++j) out.add(cols[j], x[j]);
  return out;
}

StructureTable extract_structure(const GeneratorMap& gens, const BracketRule& rule, const StructureTable* reuse) {
  if (gens.empty()) return {};
  // Without z0 every label shares the single degree sector of the zero grading.
  const auto z = gens.find(GenLabel::z_zero());
  const WeylOp z0 = z != gens.end() ? z->second : WeylOp(gens.begin()->second.chart());
  const SpanSolver span(gens, z0);
  StructureTable table;
  for (const auto& [g, _] : gens) table.labels.push_back(g);

  for (auto ia = gens.begin(); ia != gens.end(); ++ia) {
    for (auto ib = ia; ib != gens.end(); ++ib) {
      const GenLabel& a = ia->first;
      const GenLabel& b = ib->first;
      const BracketKind kind = rule(a, b);
      if (reuse) {
        const auto k = reuse->kinds.find({a, b});
        if (k != reuse->kinds.end() && k->second == kind) {
          table.brackets[{a, b}] = reuse->at(a, b);
          table.brackets[{b, a}] = reuse->at(b, a);
          table.kinds[{a, b}] = kind;
          table.kinds[{b, a}] = kind;
          continue;
        }
      }
      const WeylOp br = kind == BracketKind::Commutator ? commutator(ia->second, ib->second)
                                                        : anticommutator(ia->second, ib->second);
      auto x = span.decompose(br);
      if (!x)
        throw NotClosed("bracket of (" + a.to_string() + ", " + b.to_string() +
                        ") leaves the span; residual " + br.to_string());
      table.brackets[{a, b}] = *x;
      table.kinds[{a, b}] = kind;
      if (!(a == b)) {
        table.brackets[{b, a}] = kind == BracketKind::Commutator ? -*x : *x;
        table.kinds[{b, a}] = kind;
      }
    }
  }
  return table;
}

StructureTable extract_structure(const GeneratorMap& gens, BracketKind kind) {
  return extract_structure(gens, [kind](const GenLabel&, const GenLabel&) { return kind; });
}

bool verify_isomorphic_tables(const StructureTable& a, const StructureTable& b) {
  return a.labels == b.labels && a.brackets == b.brackets && a.kinds == b.kinds;
}

// ---------------------------------------------------------------------------

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::Section5: return "s5";
    case Normalization::Section6: return "s6";
    case Normalization::Section7: return "s7";
  }
  return "?";
}

Rational delta_of(HalfInt ell) {
  const Rational L = ell.to_rational() + Rational(1, 2);
  return L * L * Rational(1, 4);
}

std::vector<GenLabel> cga_labels(HalfInt ell) {
  std::vector<GenLabel> out{GenLabel::z_plus(), GenLabel::z_zero(), GenLabel::z_minus()};
  for (auto j = ell; j >= -ell; j -= HalfInt::from_int(1)) out.push_back(GenLabel::w(j));
  out.push_back(GenLabel::c());
  return out;
}

GeneratorMap free_generators(HalfInt ell) {
  const Chart ch = Chart::free(ell);
  const int L = ch.space_dim();
  const Rational delta = delta_of(ell);
  const auto l_plus = [&](HalfInt j) { return (ell + j).as_integer(); };  // ell + j for j half-odd

  GeneratorMap g;
  const WeylOp dt = WeylOp::derivative(ch, 0);
  const WeylOp t = WeylOp::variable(ch, 0);
  g.emplace(GenLabel::z_plus(), dt);

  WeylOp z0 = -(t * dt) - WeylOp::constant(ch, CScalar(delta));
  for (int a = 1; a <= L; ++a)
    z0 -= WeylOp::monomial(ch, CScalar(Rational(2 * a - 1, 2)), HalfInt(), unit(ch, a), unit(ch, a));
  g.emplace(GenLabel::z_zero(), z0);

  WeylOp zm = t * z0 * CScalar(2) + t * t * dt;
  for (int a = 1; a <= L - 1; ++a) {
    // (ell + a + 1/2) y_{a+1} d_{y_a}
    zm -= WeylOp::monomial(ch, CScalar(Rational(ell.twice() + 2 * a + 1, 2)), HalfInt(), unit(ch, a + 1),
                           unit(ch, a));
  }
  zm -= WeylOp::monomial(ch, cc(Rational(L, 2)), HalfInt(), unit(ch, 1, 2), zeros(ch));
  g.emplace(GenLabel::z_minus(), zm);

  const Rational norm = factorial(L - 1) * factorial(L);
  for (auto j = HalfInt::from_twice(1); j <= ell; j += HalfInt::from_int(1)) {
    // positive grading
    WeylOp wp(ch);
    const int lmj = (ell - j).as_integer();
    for (int k = 0; k <= lmj; ++k) {
      Exponents var = unit(ch, 0, lmj - k);
      wp.add_term({HalfInt(), var, unit(ch, L - k)}, CScalar(binomial(lmj, k)));
    }
    g.emplace(GenLabel::w(j), wp);

    // negative grading
    WeylOp wm(ch);
    const int lpj = l_plus(j);
    for (int k = 0; k <= L - 1; ++k)
      wm.add_term({HalfInt(), unit(ch, 0, lpj - k), unit(ch, L - k)}, CScalar(binomial(lpj, k)));
    const Rational K = factorial(lpj) / norm;
    const int jp = (j + HalfInt::from_twice(1)).as_integer();  // j + 1/2
    for (int a = 1; a <= jp; ++a) {
      const Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
      const Rational f = sign * factorial(L - a) / factorial(jp - a);
      Exponents var = unit(ch, 0, jp - a);
      var[static_cast<std::size_t>(a)] += 1;
      wm.add_term({HalfInt(), var, zeros(ch)}, cc(-K * f));
    }
    g.emplace(GenLabel::w(-j), wm);
  }
  g.emplace(GenLabel::c(), WeylOp::constant(ch, CScalar::c()));
  return g;
}

GeneratorMap osc_generators(HalfInt ell, Normalization norm) {
  if (norm != Normalization::Section7) {
    require_half_odd(ell);
    if (ell != HalfInt::from_twice(3))
      throw NormalizationUnavailable("normalization " + to_string(norm) + " exists only at ell = 3/2");
    const Chart ch = Chart::osc(ell);
    const HalfInt h = HalfInt::from_twice(1);
    GeneratorMap g;
    // index 0 = s, 1 = u, 2 = v
    g.emplace(GenLabel::z_plus(), Builder(ch)
                                      .add(rc(1), -h * 2, {}, {1})
                                      .add(rc(-1, 2), -h * 2, {0, 1}, {0, 1})
                                      .add(rc(-3, 2), -h * 2, {0, 0, 1}, {0, 0, 1})
                                      .add(rc(-1), -h * 2, {}, {})
                                      .add(cc(Rational(1, 2)), -h * 2, {0, 2}, {})
                                      .op);
    g.emplace(GenLabel::z_zero(), Builder(ch).add(rc(-1), {}, {1}).op);
    g.emplace(GenLabel::z_minus(), Builder(ch)
                                       .add(rc(-1), h * 2, {}, {1})
                                       .add(rc(-1, 2), h * 2, {0, 1}, {0, 1})
                                       .add(rc(-3, 2), h * 2, {0, 0, 1}, {0, 0, 1})
                                       .add(rc(-3), h * 2, {0, 0, 1}, {0, 1})
                                       .add(cc(Rational(-1, 2)), h * 2, {0, 2}, {})
                                       .add(rc(-1), h * 2, {}, {})
                                       .add(cc(Rational(3)), h * 2, {0, 1, 1}, {})
                                       .op);
    g.emplace(GenLabel::w(h * 3), Builder(ch).add(rc(1), -h * 3, {}, {0, 0, 1}).op);
    g.emplace(GenLabel::w(h), Builder(ch)
                                  .add(rc(1), -h, {}, {0, 0, 1})
                                  .add(rc(1), -h, {}, {0, 1})
                                  .add(cc(Rational(-1)), -h, {0, 1}, {})
                                  .op);
    g.emplace(GenLabel::w(-h), Builder(ch)
                                   .add(rc(1), h, {}, {0, 0, 1})
                                   .add(rc(2), h, {}, {0, 1})
                                   .add(cc(Rational(-1)), h, {0, 1}, {})
                                   .op);
    g.emplace(GenLabel::w(-h * 3), Builder(ch)
                                       .add(rc(1), h * 3, {}, {0, 0, 1})
                                       .add(rc(3), h * 3, {}, {0, 1})
                                       .add(cc(Rational(-3)), h * 3, {0, 0, 1}, {})
                                       .op);
    g.emplace(GenLabel::c(), WeylOp::constant(ch, CScalar::c()));
    return g;
  }

  const Chart ch = Chart::osc(ell);
  const int L = ch.space_dim();
  const Rational delta = delta_of(ell);
  const Rational inv2l1(1, 2 * L);  // 1 / (2 ell + 1)
  const HalfInt one = HalfInt::from_int(1);
  GeneratorMap g;

  // e^{mu s} (d_s - sum (a - 1/2) u_a d_{u_a})
  auto euler = [&](HalfInt mu, long ds_sign) {
    WeylOp op(ch);
    op.add_term({mu, zeros(ch), unit(ch, 0)}, rc(ds_sign));
    for (int a = 1; a <= L; ++a) op.add_term({mu, unit(ch, a), unit(ch, a)}, rc(-(2 * a - 1), 2));
    op.add_term({mu, zeros(ch), zeros(ch)}, CScalar(-delta));
    return op;
  };

  WeylOp zp = euler(-one, 1);
  zp.add_term({-one, unit(ch, 1, 2), zeros(ch)}, cc(Rational(1, 2) * inv2l1));
  g.emplace(GenLabel::z_plus(), zp);
  g.emplace(GenLabel::z_zero(), -WeylOp::derivative(ch, 0));

  WeylOp zm = euler(one, -1);
  for (int a = 1; a <= L - 1; ++a)
    zm.add_term({one, unit(ch, a + 1), unit(ch, a)}, CScalar(-Rational(ell.twice() + 2 * a + 1, 2)));
  zm.add_term({one, unit(ch, 1, 2), zeros(ch)}, cc(Rational(1, 2) * (inv2l1 - Rational(L))));
  if (L >= 2) {
    Exponents u1u2 = unit(ch, 1);
    u1u2[2] = 1;
    zm.add_term({one, u1u2, zeros(ch)}, cc(Rational(1, 2) * Rational(ell.twice() + 3) * inv2l1));
  }
  g.emplace(GenLabel::z_minus(), zm);

  const Rational norm_f = factorial(L - 1) * factorial(L);
  for (auto j = HalfInt::from_twice(1); j <= ell; j += one) {
    WeylOp wp(ch);
    const int lmj = (ell - j).as_integer();
    for (int k = 0; k <= lmj; ++k) wp.add_term({-j, zeros(ch), unit(ch, L - k)}, CScalar(binomial(lmj, k)));
    if (j == HalfInt::from_twice(1)) wp.add_term({-j, unit(ch, 1), zeros(ch)}, cc(-inv2l1));
    g.emplace(GenLabel::w(j), wp);

    WeylOp wm(ch);
    const int lpj = (ell + j).as_integer();
    for (int k = 0; k <= L - 1; ++k) wm.add_term({j, zeros(ch), unit(ch, L - k)}, CScalar(binomial(lpj, k)));
    const Rational K = factorial(lpj) / norm_f;
    const int jp = (j + HalfInt::from_twice(1)).as_integer();
    for (int a = 1; a <= jp; ++a) {
      const Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
      wm.add_term({j, unit(ch, a), zeros(ch)}, cc(-K * sign * factorial(L - a) / factorial(jp - a)));
    }
    wm.add_term({j, unit(ch, 1), zeros(ch)}, cc(-inv2l1 * binomial(lpj, L - 1)));
    g.emplace(GenLabel::w(-j), wm);
  }
  g.emplace(GenLabel::c(), WeylOp::constant(ch, CScalar::c()));
  return g;
}

GeneratorMap threehalf_free_fixture() {
  const Chart ch = Chart::free(HalfInt::from_twice(3));
  const HalfInt h = HalfInt::from_twice(1);
  GeneratorMap g;
  // index 0 = t, 1 = x, 2 = y
  g.emplace(GenLabel::z_plus(), Builder(ch).add(rc(1), {}, {1}).op);
  g.emplace(GenLabel::z_zero(), Builder(ch)
                                    .add(rc(-1), {1}, {1})
                                    .add(rc(-1, 2), {0, 1}, {0, 1})
                                    .add(rc(-3, 2), {0, 0, 1}, {0, 0, 1})
                                    .add(rc(-1), {}, {})
                                    .op);
  g.emplace(GenLabel::z_minus(), Builder(ch)
                                     .add(rc(-1), {2}, {1})
                                     .add(rc(-1), {1, 1}, {0, 1})
                                     .add(rc(-3), {1, 0, 1}, {0, 0, 1})
                                     .add(rc(-3), {0, 0, 1}, {0, 1})
                                     .add(cc(Rational(-1)), {0, 2}, {})
                                     .add(rc(-2), {1}, {})
                                     .op);
  g.emplace(GenLabel::w(h * 3), Builder(ch).add(rc(1), {}, {0, 0, 1}).op);
  g.emplace(GenLabel::w(h), Builder(ch).add(rc(1), {1}, {0, 0, 1}).add(rc(1), {}, {0, 1}).op);
  g.emplace(GenLabel::w(-h), Builder(ch)
                                 .add(rc(1), {2}, {0, 0, 1})
                                 .add(rc(2), {1}, {0, 1})
                                 .add(cc(Rational(1)), {0, 1}, {})
                                 .op);
  g.emplace(GenLabel::w(-h * 3), Builder(ch)
                                     .add(rc(1), {3}, {0, 0, 1})
                                     .add(rc(3), {2}, {0, 1})
                                     .add(cc(Rational(3)), {1, 1}, {})
                                     .add(cc(Rational(-3)), {0, 0, 1}, {})
                                     .op);
  g.emplace(GenLabel::c(), WeylOp::constant(ch, CScalar::c()));
  return g;
}

StructureTable threehalf_commutator_fixture() {
  const HalfInt h = HalfInt::from_twice(1);
  using G = GenLabel;
  StructureTable t;
  t.labels = {G::z_plus(), G::z_zero(), G::z_minus(), G::w(-h * 3), G::w(-h), G::w(h), G::w(h * 3), G::c()};
  std::sort(t.labels.begin(), t.labels.end());
  for (const auto& a : t.labels)
    for (const auto& b : t.labels) {
      t.brackets[{a, b}] = AlgebraElement();
      t.kinds[{a, b}] = BracketKind::Commutator;
    }
  auto set = [&](const G& a, const G& b, const AlgebraElement& x) {
    t.brackets[{a, b}] = x;
    t.brackets[{b, a}] = -x;
  };
  auto one = [](const G& g, long k) { return AlgebraElement::single(g, CScalar(k)); };
  auto frac = [](const G& g, HalfInt k) { return AlgebraElement::single(g, CScalar(k.to_rational())); };

  set(G::z_plus(), G::z_minus(), one(G::z_zero(), 2));
  set(G::z_zero(), G::z_plus(), one(G::z_plus(), 1));
  set(G::z_zero(), G::z_minus(), one(G::z_minus(), -1));
  for (HalfInt j : {h, h * 3}) {
    set(G::z_zero(), G::w(j), frac(G::w(j), j));
    set(G::z_zero(), G::w(-j), frac(G::w(-j), -j));
  }
  set(G::z_plus(), G::w(h), one(G::w(h * 3), 1));
  set(G::z_minus(), G::w(-h), one(G::w(-h * 3), 1));
  set(G::z_plus(), G::w(-h), one(G::w(h), 2));
  set(G::z_minus(), G::w(h), one(G::w(-h), 2));
  set(G::z_plus(), G::w(-h * 3), one(G::w(-h), 3));
  set(G::z_minus(), G::w(h * 3), one(G::w(h), 3));
  set(G::w(h), G::w(-h), one(G::c(), 1));
  set(G::w(h * 3), G::w(-h * 3), one(G::c(), -3));
  return t;
}

// ---------------------------------------------------------------------------

HalfInt term_scaling(const Chart& chart, const TermKey& key) {
  if (chart.kind == ChartKind::Osc) return -key.expS;
  // twice the weight: [t] = -1 -> -2, [y_a] = -(2a - 1)
  std::int64_t twice = 2 * (key.der[0] - key.var[0]);
  for (std::size_t a = 1; a < key.var.size(); ++a)
    twice += static_cast<std::int64_t>(2 * a - 1) * (key.der[a] - key.var[a]);
  return HalfInt::from_twice(twice);
}

bool is_scaling_homogeneous(const WeylOp& op, HalfInt r) {
  for (const auto& [k, _] : op.terms())
    if (term_scaling(op.chart(), k) != r) return false;
  return true;
}

}  // namespace cga
