#include "cga/serialize.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace cga {

HalfInt parse_ell(const std::string& text) {
  static const std::regex form(R"(\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw ParseError("ell must be an exact fraction, got " + text);
  const Rational q = Rational::parse(m[1].str(), m[2].matched ? m[2].str() : "1");
  const Rational twice = q * Rational(2);
  if (!twice.is_integer() || q.sign() <= 0) throw BadEll("ell must be half-odd-integer, got " + text);
  const HalfInt ell = HalfInt::from_twice(std::stoll(twice.numerator_str()));
  require_half_odd(ell);
  return ell;
}

Notation notation_for(const Chart& chart, const std::string& symbol) {
  Notation n;
  n.symbol = symbol;
  const bool free = chart.kind == ChartKind::Free;
  n.names.push_back(free ? "t" : "s");
  n.latex_names.push_back(n.names.back());
  const int L = chart.space_dim();
  if (L == 2) {
    const char* a = free ? "x" : "u";
    const char* b = free ? "y" : "v";
    n.names.insert(n.names.end(), {a, b});
    n.latex_names.insert(n.latex_names.end(), {a, b});
    return n;
  }
  const std::string base = free ? "y" : "u";
  for (int a = 1; a <= L; ++a) {
    n.names.push_back(base + std::to_string(a));
    n.latex_names.push_back(base + "_{" + std::to_string(a) + "}");
  }
  return n;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Rational& r) { return Json{{"n", r.numerator_str()}, {"d", r.denominator_str()}}; }

Json to_json(const CScalar& s) {
  Json out = Json::array();
  for (const auto& [k, a] : s.terms()) out.push_back({{"cpow", k}, {"coef", to_json(a)}});
  return out;
}

namespace {

Json chart_json(const Chart& ch) {
  return Json{{"kind", ch.kind == ChartKind::Free ? "free" : "osc"}, {"twice_ell", ch.ell.twice()}};
}

}  // namespace

Json to_json(HalfInt h) { return Json{{"twice", h.twice()}}; }

Json to_json(const WeylOp& op) {
  Json terms = Json::array();
  for (const auto& [k, c] : op.terms())
    terms.push_back({{"coef", to_json(c)}, {"twice_expS", k.expS.twice()}, {"var", k.var}, {"der", k.der}});
  return Json{{"chart", chart_json(op.chart())}, {"terms", terms}};
}

Json to_json(const GaussFunc& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms())
    terms.push_back({{"coef", to_json(c)}, {"twice_expS", k.expS.twice()}, {"pow", k.pow}});
  return Json{{"chart", chart_json(f.chart())},
              {"kappa", to_json(f.kappa())},
              {"terms", terms}};
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::object();
  for (const auto& [g, c] : x.coeffs()) out[g.to_string()] = to_text(c);
  return out;
}

Rational rational_from_json(const Json& j) {
  try {
    return Rational::parse(j.at("n").get<std::string>(), j.at("d").get<std::string>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

CScalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("scalar must be an array of terms");
  CScalar out;
  try {
    for (const auto& t : j) out += CScalar::monomial(rational_from_json(t.at("coef")), t.at("cpow").get<int>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad scalar: ") + e.what());
  }
  return out;
}

WeylOp op_from_json(const Json& j, const Chart& chart) {
  try {
    const Json& cj = j.at("chart");
    const bool free = cj.at("kind").get<std::string>() == "free";
    if (free != (chart.kind == ChartKind::Free) || cj.at("twice_ell").get<std::int64_t>() != chart.ell.twice())
      throw ChartMismatch("operator JSON belongs to a different chart");
    WeylOp op(chart);
    for (const auto& t : j.at("terms")) {
      TermKey key{HalfInt::from_twice(t.at("twice_expS").get<std::int64_t>()), t.at("var").get<Exponents>(),
                  t.at("der").get<Exponents>()};
      op.add_term(std::move(key), scalar_from_json(t.at("coef")));
    }
    return op;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad operator JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Text and LaTeX

namespace {

struct Style {
  bool latex;
};

std::string power_of(const std::string& base, int k, const Style& st) {
  if (k == 1) return base;
  return st.latex ? base + "^{" + std::to_string(k) + "}" : base + "^" + std::to_string(k);
}

// Magnitude of a * symbol^k, without sign.
std::string magnitude(const Rational& a, int k, const std::string& sym, const Style& st) {
  std::string p = a.numerator_str();
  if (!p.empty() && p[0] == '-') p.erase(0, 1);
  const std::string q = a.denominator_str();
  std::string num, den;
  if (k > 0) num = (p == "1" ? "" : p) + power_of(sym, k, st);
  else num = p;
  if (k < 0) den = (q == "1" ? "" : q) + power_of(sym, -k, st);
  else if (q != "1") den = q;
  if (den.empty()) return num;
  if (st.latex) return "\\frac{" + (num.empty() ? "1" : num) + "}{" + den + "}";
  const bool compound = k < 0 && q != "1";
  return (num.empty() ? "1" : num) + "/" + (compound ? "(" + den + ")" : den);
}

// Full scalar, signs included, highest power first.
std::string scalar_string(const CScalar& s, const std::string& sym, const Style& st) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    const bool neg = it->second.sign() < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += magnitude(it->second, it->first, sym, st);
    first = false;
  }
  return out;
}

// Coefficient of a product term: sign and the printed factor ("" for 1).
std::pair<bool, std::string> coefficient_parts(const CScalar& c, const std::string& sym, const Style& st,
                                               bool has_factors) {
  if (c.is_monomial()) {
    const auto& [k, a] = *c.terms().begin();
    std::string mag = magnitude(a, k, sym, st);
    if (has_factors && mag == "1") mag.clear();
    return {a.sign() < 0, mag};
  }
  const std::string inner = scalar_string(c, sym, st);
  return {false, st.latex ? "\\left(" + inner + "\\right)" : "(" + inner + ")"};
}

std::string exp_factor(HalfInt mu, const std::string& s, const Style& st) {
  if (mu == HalfInt()) return "";
  const Rational r = mu.to_rational();
  const std::string sign = r.sign() < 0 ? "-" : "";
  const std::string mag = magnitude(r, 0, "", st);
  const std::string arg = sign + (mag == "1" ? "" : mag + (st.latex ? "" : " ")) + s;
  return st.latex ? "e^{" + arg + "}" : "exp(" + arg + ")";
}

std::string factors(HalfInt mu, const Exponents& var, const Exponents& der, const Notation& n, const Style& st) {
  const auto& names = st.latex ? n.latex_names : n.names;
  std::vector<std::string> parts;
  const std::string e = exp_factor(mu, names[0], st);
  if (!e.empty()) parts.push_back(e);
  for (std::size_t i = 0; i < var.size(); ++i)
    if (var[i] > 0) parts.push_back(power_of(names[i], var[i], st));
  for (std::size_t i = 0; i < der.size(); ++i)
    if (der[i] > 0) {
      const std::string d = st.latex ? "\\partial_{" + names[i] + "}" : "d_" + names[i];
      parts.push_back(power_of(d, der[i], st));
    }
  std::string out;
  for (const auto& p : parts) out += (out.empty() || st.latex ? "" : " ") + p;
  return out;
}

struct Line {
  CScalar coef;
  std::string body;
  std::vector<int> key;  // ascending
};

std::string join(std::vector<Line> lines, const Notation& n, const Style& st) {
  if (lines.empty()) return "0";
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.key < b.key; });
  std::string out;
  bool first = true;
  for (const auto& l : lines) {
    const auto [neg, mag] = coefficient_parts(l.coef, n.symbol, st, !l.body.empty());
    std::string term = mag;
    if (!l.body.empty()) term += (mag.empty() || st.latex ? "" : " ") + l.body;
    if (term.empty()) term = "1";
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += term;
    first = false;
  }
  return out;
}

int sum(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

// Pure derivatives, pure multiplications, diagonal u_a d_a, other mixed
// terms, constants; then higher derivative order and lower variable index.
std::vector<int> op_key(const TermKey& k) {
  const int dv = sum(k.var), dd = sum(k.der);
  int category = 4;
  if (dd > 0 && dv == 0) category = 0;
  else if (dd == 0 && dv > 0) category = 1;
  else if (dd > 0 && k.var == k.der) category = 2;
  else if (dd > 0) category = 3;
  std::vector<int> key{category, -dd, -dv};
  for (const auto* e : {&k.var, &k.der})
    for (std::size_t i = 0; i < e->size(); ++i)
      for (int r = 0; r < (*e)[i]; ++r) key.push_back(static_cast<int>(i));
  key.push_back(static_cast<int>(k.expS.twice()));
  return key;
}

std::string op_string(const WeylOp& op, const Notation& n, const Style& st) {
  std::vector<Line> lines;
  for (const auto& [k, c] : op.terms()) lines.push_back({c, factors(k.expS, k.var, k.der, n, st), op_key(k)});
  return join(std::move(lines), n, st);
}

std::string func_string(const GaussFunc& f, const Notation& n, const Style& st) {
  std::vector<Line> lines;
  const Exponents none(f.chart().nvars(), 0);
  for (const auto& [k, c] : f.terms()) lines.push_back({c, factors(k.expS, k.pow, none, n, st), {-sum(k.pow)}});
  std::string poly = join(std::move(lines), n, st);
  if (f.kappa().is_zero()) return poly;
  const auto& names = st.latex ? n.latex_names : n.names;
  const std::string arg = scalar_string(f.kappa(), n.symbol, st);
  const bool compound = !f.kappa().is_monomial();
  const std::string x2 = power_of(names.at(1), 2, st);
  const std::string gauss = st.latex ? "e^{" + (compound ? "\\left(" + arg + "\\right)" : arg) + x2 + "}"
                                     : "exp(" + (compound ? "(" + arg + ")" : arg) + " " + x2 + ")";
  if (f.terms().size() > 1) poly = st.latex ? "\\left(" + poly + "\\right)" : "(" + poly + ")";
  return poly + (st.latex ? " " : " * ") + gauss;
}

}  // namespace

std::string to_text(const CScalar& s, const std::string& symbol) { return scalar_string(s, symbol, {false}); }
std::string to_text(const WeylOp& op, const Notation& n) { return op_string(op, n, {false}); }
std::string to_text(const GaussFunc& f, const Notation& n) { return func_string(f, n, {false}); }

std::string to_latex(const CScalar& s, const std::string& symbol) { return scalar_string(s, symbol, {true}); }
std::string to_latex(const WeylOp& op, const Notation& n) { return op_string(op, n, {true}); }
std::string to_latex(const GaussFunc& f, const Notation& n) { return func_string(f, n, {true}); }

std::string label_latex(const GenLabel& g) {
  auto idx = [](HalfInt h) {
    const Rational r = h.to_rational();
    const std::string sign = r.sign() < 0 ? "-" : "+";
    return sign + magnitude(r, 0, "", {true});
  };
  switch (g.kind) {
    case GenLabel::Kind::ZPlus: return "z_{+1}";
    case GenLabel::Kind::ZZero: return "z_{0}";
    case GenLabel::Kind::ZMinus: return "z_{-1}";
    case GenLabel::Kind::C: return "c";
    case GenLabel::Kind::W: return "w_{" + idx(g.i) + "}";
    case GenLabel::Kind::WW: return "w_{" + idx(g.i) + "," + idx(g.j) + "}";
    case GenLabel::Kind::Omega: return "\\Omega_{" + g.i.to_string() + "}";
  }
  return "";
}

}  // namespace cga
