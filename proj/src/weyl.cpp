#include "cga/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace cga {

void require_half_odd(HalfInt ell) {
  if (ell.is_integer() || ell.twice() < 1)
    throw BadEll("ell must be half-odd-integer, got " + ell.to_string());
}

Chart Chart::free(HalfInt ell) {
  require_half_odd(ell);
  return {ChartKind::Free, ell};
}

Chart Chart::osc(HalfInt ell) {
  require_half_odd(ell);
  return {ChartKind::Osc, ell};
}

namespace {

// n (n-1) ... (n-k+1)
Rational falling(int n, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i);
  return r;
}

std::string chart_name(const Chart& c) {
  return std::string(c.kind == ChartKind::Free ? "free" : "osc") + "(ell=" + c.ell.to_string() + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

WeylOp WeylOp::constant(Chart chart, const CScalar& value) {
  WeylOp op(chart);
  op.add_term({HalfInt(), Exponents(chart.nvars(), 0), Exponents(chart.nvars(), 0)}, value);
  return op;
}

WeylOp WeylOp::variable(Chart chart, int i) {
  if (i < 0 || i >= chart.nvars() || (i == 0 && chart.kind == ChartKind::Osc))
    throw std::out_of_range("no variable at index " + std::to_string(i) + " in " + chart_name(chart));
  Exponents var(chart.nvars(), 0);
  var[static_cast<std::size_t>(i)] = 1;
  return monomial(chart, CScalar(1), HalfInt(), std::move(var), Exponents(chart.nvars(), 0));
}

WeylOp WeylOp::derivative(Chart chart, int i) {
  if (i < 0 || i >= chart.nvars())
    throw std::out_of_range("no derivative at index " + std::to_string(i) + " in " + chart_name(chart));
  Exponents der(chart.nvars(), 0);
  der[static_cast<std::size_t>(i)] = 1;
  return monomial(chart, CScalar(1), HalfInt(), Exponents(chart.nvars(), 0), std::move(der));
}

WeylOp WeylOp::exp_s(Chart chart, HalfInt mu) {
  if (chart.kind != ChartKind::Osc) throw ChartMismatch("exp(mu s) exists only in the Osc chart");
  return monomial(chart, CScalar(1), mu, Exponents(chart.nvars(), 0), Exponents(chart.nvars(), 0));
}

WeylOp WeylOp::monomial(Chart chart, const CScalar& coef, HalfInt expS, Exponents var, Exponents der) {
  WeylOp op(chart);
  op.add_term({expS, std::move(var), std::move(der)}, coef);
  return op;
}

CScalar WeylOp::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? CScalar() : it->second;
}

bool WeylOp::is_multiplication() const {
  for (const auto& [k, _] : terms_)
    for (int d : k.der)
      if (d != 0) return false;
  return true;
}

int WeylOp::max_derivative_order() const {
  int best = 0;
  for (const auto& [k, _] : terms_) {
    int o = 0;
    for (int d : k.der) o += d;
    best = std::max(best, o);
  }
  return best;
}

void WeylOp::add_term(TermKey key, const CScalar& coef) {
  const auto n = static_cast<std::size_t>(chart_.nvars());
  if (key.var.size() != n || key.der.size() != n)
    throw std::invalid_argument("exponent vector size does not match " + chart_name(chart_));
  if (chart_.kind == ChartKind::Osc) {
    if (key.var[0] != 0) throw std::logic_error("polynomial power of s in the Osc chart");
  } else if (key.expS != HalfInt()) {
    throw std::logic_error("exponential weight in the Free chart");
  }
  for (int e : key.var)
    if (e < 0) throw std::logic_error("negative variable power");
  for (int e : key.der)
    if (e < 0) throw std::logic_error("negative derivative power");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void WeylOp::check_chart(const WeylOp& o) const {
  if (!(chart_ == o.chart_))
    throw ChartMismatch("operands live in " + chart_name(chart_) + " and " + chart_name(o.chart_));
}

WeylOp WeylOp::operator-() const {
  WeylOp r(chart_);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  check_chart(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
  check_chart(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  WeylOp r = *this;
  r += o;
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
  WeylOp r = *this;
  r -= o;
  return r;
}

WeylOp WeylOp::operator*(const CScalar& s) const {
  WeylOp r(chart_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c * s);
  return r;
}

namespace {

std::int64_t small_binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t small_falling(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

WeylOp WeylOp::operator*(const WeylOp& o) const {
  check_chart(o);
  WeylOp r(chart_);
  const auto n = static_cast<std::size_t>(chart_.nvars());
  const bool osc = chart_.kind == ChartKind::Osc;

  // For each index, the (k, factor) pairs of d^beta x^gamma = sum_k factor x^{gamma-k} d^{beta-k}.
  // In the Osc chart index 0 carries d_s^beta exp(nu s) with factor C(beta,k) (2nu)^k / 2^k;
  // the 2^k is collected in `halves`.
  struct Move {
    int k;
    std::int64_t factor;
  };
  std::vector<std::vector<Move>> moves(n);
  std::vector<std::size_t> pick(n);
  TermKey key;
  key.var.resize(n);
  key.der.resize(n);

  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      bool empty = false;
      bool trivial = true;
      for (std::size_t i = 0; i < n; ++i) {
        moves[i].clear();
        const int beta = ka.der[i];
        if (i == 0 && osc) {
          const std::int64_t nu2 = kb.expS.twice();
          std::int64_t p = 1;
          for (int k = 0; k <= beta; ++k) {
            if (p != 0) moves[i].push_back({k, small_binomial(beta, k) * p});
            p *= nu2;
          }
        } else {
          const int gamma = kb.var[i];
          for (int k = 0; k <= std::min(beta, gamma); ++k)
            moves[i].push_back({k, small_binomial(beta, k) * small_falling(gamma, k)});
        }
        empty = empty || moves[i].empty();
        trivial = trivial && moves[i].size() == 1;
      }
      if (empty) continue;
      const CScalar cab = ca * cb;
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        std::int64_t f = 1;
        int halves = 0;
        for (std::size_t i = 0; i < n; ++i) {
          const Move& m = moves[i][pick[i]];
          f *= m.factor;
          if (i == 0 && osc) halves = m.k;
          key.var[i] = (i == 0 && osc) ? 0 : ka.var[i] + kb.var[i] - m.k;
          key.der[i] = ka.der[i] - m.k + kb.der[i];
        }
        key.expS = ka.expS + kb.expS;
        if (trivial && f == 1) {
          r.accumulate(key, cab);
        } else {
          r.accumulate(key, cab * CScalar(Rational(f, std::int64_t{1} << halves)));
        }
        std::size_t i = 0;
        while (i < n && ++pick[i] == moves[i].size()) pick[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return r;
}

void WeylOp::accumulate(const TermKey& key, const CScalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  const bool osc = chart_.kind == ChartKind::Osc;
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.expS != HalfInt()) os << "*e^(" << k.expS.to_string() << "s)";
    for (std::size_t i = 0; i < k.var.size(); ++i) {
      if (k.var[i] == 0) continue;
      os << "*" << (i == 0 ? std::string("t") : (osc ? "u" : "y") + std::to_string(i));
      if (k.var[i] != 1) os << "^" << k.var[i];
    }
    for (std::size_t i = 0; i < k.der.size(); ++i) {
      if (k.der[i] == 0) continue;
      os << "*d" << (i == 0 ? std::string(osc ? "s" : "t") : (osc ? "u" : "y") + std::to_string(i));
      if (k.der[i] != 1) os << "^" << k.der[i];
    }
  }
  return os.str();
}

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }
WeylOp anticommutator(const WeylOp& a, const WeylOp& b) { return a * b + b * a; }

WeylOp power(const WeylOp& a, int n) {
  WeylOp r = WeylOp::constant(a.chart(), CScalar(1));
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(Chart source, Chart target, std::vector<WeylOp> var_images,
                           std::vector<WeylOp> der_images, std::optional<WeylOp> exp_half,
                           std::optional<WeylOp> exp_neg_half)
    : source_(source),
      target_(target),
      vars_(std::move(var_images)),
      ders_(std::move(der_images)),
      exp_half_(std::move(exp_half)),
      exp_neg_half_(std::move(exp_neg_half)) {
  const auto n = static_cast<std::size_t>(source.nvars());
  if (vars_.size() != n || ders_.size() != n)
    throw RelationViolation("substitution needs one image per variable and derivative");
  const bool osc = source.kind == ChartKind::Osc;
  if (osc && (!exp_half_ || !exp_neg_half_))
    throw RelationViolation("substitution from the Osc chart needs images of exp(+-s/2)");

  auto require = [&](const WeylOp& lhs, const WeylOp& rhs, const std::string& what) {
    if (!(lhs.chart() == target_) || !(rhs.chart() == target_))
      throw ChartMismatch("substitution image outside the target chart: " + what);
    if (!(lhs == rhs)) throw RelationViolation(what + " fails: " + (lhs - rhs).to_string());
  };
  const WeylOp zero(target_);
  const WeylOp one = WeylOp::constant(target_, CScalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      if (!(osc && (i == 0 || j == 0)))
        require(commutator(vars_[i], vars_[j]), zero, "[v" + ij + "] = 0");
      require(commutator(ders_[i], ders_[j]), zero, "[d" + ij + "] = 0");
      if (osc && j == 0) continue;
      require(commutator(ders_[i], vars_[j]), i == j ? one : zero, "[d_i, v_j] = delta at " + ij);
    }
  }
  if (osc) {
    const WeylOp& e = *exp_half_;
    const WeylOp& ei = *exp_neg_half_;
    require(e * ei, one, "exp(s/2) exp(-s/2) = 1");
    require(ei * e, one, "exp(-s/2) exp(s/2) = 1");
    require(commutator(ders_[0], e), e * CScalar(Rational(1, 2)), "[d_s, exp(s/2)] = exp(s/2)/2");
    for (std::size_t i = 1; i < n; ++i) {
      require(commutator(vars_[i], e), zero, "[u, exp(s/2)] = 0");
      require(commutator(ders_[i], e), zero, "[d_u, exp(s/2)] = 0");
    }
  }
}

Substitution Substitution::identity(Chart chart) {
  std::vector<WeylOp> vars;
  std::vector<WeylOp> ders;
  const bool osc = chart.kind == ChartKind::Osc;
  for (int i = 0; i < chart.nvars(); ++i) {
    vars.push_back(osc && i == 0 ? WeylOp(chart) : WeylOp::variable(chart, i));
    ders.push_back(WeylOp::derivative(chart, i));
  }
  if (osc)
    return Substitution(chart, chart, vars, ders, WeylOp::exp_s(chart, HalfInt::from_twice(1)),
                        WeylOp::exp_s(chart, HalfInt::from_twice(-1)));
  return Substitution(chart, chart, vars, ders);
}

WeylOp Substitution::operator()(const WeylOp& op) const {
  if (!(op.chart() == source_)) throw ChartMismatch("operator is not in the substitution source chart");
  const auto n = static_cast<std::size_t>(source_.nvars());
  // Cached powers: index i -> list of powers 0..k.
  std::vector<std::vector<WeylOp>> vpow(n), dpow(n);
  std::vector<WeylOp> epow, enpow;
  const WeylOp one = WeylOp::constant(target_, CScalar(1));
  auto get = [&](std::vector<WeylOp>& cache, const WeylOp& base, int k) -> const WeylOp& {
    if (cache.empty()) cache.push_back(one);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[static_cast<std::size_t>(k)];
  };

  WeylOp out(target_);
  for (const auto& [k, c] : op.terms()) {
    WeylOp t = WeylOp::constant(target_, c);
    const auto tw = k.expS.twice();
    if (tw > 0) t = t * get(epow, *exp_half_, static_cast<int>(tw));
    if (tw < 0) t = t * get(enpow, *exp_neg_half_, static_cast<int>(-tw));
    for (std::size_t i = 0; i < n; ++i)
      if (k.var[i] != 0) t = t * get(vpow[i], vars_[i], k.var[i]);
    for (std::size_t i = 0; i < n; ++i)
      if (k.der[i] != 0) t = t * get(dpow[i], ders_[i], k.der[i]);
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------

WeylOp conjugate(const WeylOp& a, const Weight& q) {
  const Chart& ch = a.chart();
  int index = 0;
  WeylOp shifted(ch);
  if (q.kind == Weight::Kind::Gaussian) {
    if (ch.nvars() < 2) throw UnsupportedWeight("no space variable to carry a Gaussian weight");
    index = 1;
    shifted = WeylOp::derivative(ch, 1) + WeylOp::variable(ch, 1) * q.kappa;
  } else {
    if (ch.kind != ChartKind::Osc) throw UnsupportedWeight("linear weight delta*s needs the Osc chart");
    index = 0;
    shifted = WeylOp::derivative(ch, 0) + WeylOp::constant(ch, CScalar(q.delta));
  }

  std::vector<WeylOp> pows{WeylOp::constant(ch, CScalar(1))};
  WeylOp out(ch);
  for (const auto& [k, c] : a.terms()) {
    const int p = k.der[static_cast<std::size_t>(index)];
    if (p == 0) {
      out.add_term(k, c);
      continue;
    }
    while (static_cast<int>(pows.size()) <= p) pows.push_back(pows.back() * shifted);
    // Derivatives commute, so the shifted factor may be placed first.
    TermKey left{k.expS, k.var, Exponents(static_cast<std::size_t>(ch.nvars()), 0)};
    TermKey right{HalfInt(), Exponents(static_cast<std::size_t>(ch.nvars()), 0), k.der};
    right.der[static_cast<std::size_t>(index)] = 0;
    WeylOp l(ch), r(ch);
    l.add_term(left, c);
    r.add_term(right, CScalar(1));
    out += l * pows[static_cast<std::size_t>(p)] * r;
  }
  return out;
}

std::optional<HalfInt> degree_of(const WeylOp& a, const WeylOp& z0) {
  if (a.is_zero()) return std::nullopt;
  const WeylOp b = commutator(z0, a);
  const auto& [key, ca] = *a.terms().begin();
  const CScalar cb = b.coefficient(key);
  auto ratio = cb.divide_exact(ca);
  if (!ratio || !ratio->is_constant()) return std::nullopt;
  const Rational r = ratio->constant_term();
  const Rational twice = r * Rational(2);
  if (!twice.is_integer()) return std::nullopt;
  if (!(b == a * *ratio)) return std::nullopt;
  return HalfInt::from_twice(twice.raw().get_num().get_si());
}

// ---------------------------------------------------------------------------

GaussFunc GaussFunc::gaussian(Chart chart, const CScalar& kappa, HalfInt mu) {
  return monomial(chart, kappa, CScalar(1), mu, Exponents(static_cast<std::size_t>(chart.nvars()), 0));
}

GaussFunc GaussFunc::monomial(Chart chart, const CScalar& kappa, const CScalar& coef, HalfInt mu, Exponents pow) {
  GaussFunc f(chart, kappa);
  f.add_term({mu, std::move(pow)}, coef);
  return f;
}

void GaussFunc::add_term(FuncKey key, const CScalar& coef) {
  if (key.pow.size() != static_cast<std::size_t>(chart_.nvars()))
    throw std::invalid_argument("exponent vector size does not match chart");
  if (chart_.kind == ChartKind::Osc && key.pow[0] != 0)
    throw std::logic_error("polynomial power of s in the Osc chart");
  if (chart_.kind == ChartKind::Free && key.expS != HalfInt())
    throw std::logic_error("exponential weight in the Free chart");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GaussFunc::check_compatible(const GaussFunc& o) const {
  if (!(chart_ == o.chart_)) throw ChartMismatch("functions live in different charts");
  if (!(kappa_ == o.kappa_))
    throw std::invalid_argument("cannot combine functions with different Gaussian exponents");
}

GaussFunc GaussFunc::operator+(const GaussFunc& o) const {
  check_compatible(o);
  GaussFunc r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

GaussFunc GaussFunc::operator-(const GaussFunc& o) const {
  check_compatible(o);
  GaussFunc r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

GaussFunc GaussFunc::operator*(const CScalar& s) const {
  GaussFunc r(chart_, kappa_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, c * s);
  return r;
}

std::optional<CScalar> GaussFunc::ratio_to(const GaussFunc& other) const {
  if (!(chart_ == other.chart_) || !(kappa_ == other.kappa_)) return std::nullopt;
  if (other.is_zero()) return is_zero() ? std::optional<CScalar>(CScalar()) : std::nullopt;
  const auto& [key, co] = *other.terms_.begin();
  auto it = terms_.find(key);
  if (it == terms_.end()) return std::nullopt;
  auto lambda = it->second.divide_exact(co);
  if (!lambda || !(other * *lambda == *this)) return std::nullopt;
  return lambda;
}

std::string GaussFunc::to_string() const {
  std::ostringstream os;
  const bool osc = chart_.kind == ChartKind::Osc;
  os << "[";
  if (terms_.empty()) os << "0";
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.expS != HalfInt()) os << "*e^(" << k.expS.to_string() << "s)";
    for (std::size_t i = 0; i < k.pow.size(); ++i) {
      if (k.pow[i] == 0) continue;
      os << "*" << (i == 0 ? std::string("t") : (osc ? "u" : "y") + std::to_string(i));
      if (k.pow[i] != 1) os << "^" << k.pow[i];
    }
  }
  os << "] * exp((" << kappa_.to_string() << ") x1^2)";
  return os.str();
}

GaussFunc apply(const WeylOp& a, const GaussFunc& f) {
  if (!(a.chart() == f.chart())) throw ChartMismatch("operator and function live in different charts");
  const Chart& ch = a.chart();
  // exp(-k x^2) A exp(k x^2) acts on the polynomial part.
  const WeylOp op = f.kappa().is_zero() ? a : conjugate(a, Weight::gaussian(f.kappa() * CScalar(2)));
  const auto n = static_cast<std::size_t>(ch.nvars());
  const bool osc = ch.kind == ChartKind::Osc;

  GaussFunc out(ch, f.kappa());
  FuncKey key;
  key.pow.resize(n);
  for (const auto& [ka, ca] : op.terms()) {
    for (const auto& [kf, cf] : f.terms()) {
      Rational factor(1);
      bool vanish = false;
      for (std::size_t i = 0; i < n && !vanish; ++i) {
        const int d = ka.der[i];
        if (i == 0 && osc) {
          factor *= kf.expS.to_rational().pow(d);
          key.pow[i] = 0;
        } else {
          if (d > kf.pow[i]) vanish = true;
          else {
            factor *= falling(kf.pow[i], d);
            key.pow[i] = kf.pow[i] - d + ka.var[i];
          }
        }
      }
      if (vanish || factor.is_zero()) continue;
      key.expS = ka.expS + kf.expS;
      out.add_term(key, ca * cf * CScalar(factor));
    }
  }
  return out;
}

}  // namespace cga
