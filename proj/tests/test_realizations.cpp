#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <tuple>

#include "cga/errors.hpp"
#include "cga/realizations.hpp"
#include "cga/transform.hpp"

using namespace cga;

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kThreeHalf = HalfInt::from_twice(3);

CScalar cs(long n, long d = 1, int k = 0) { return CScalar::monomial(Rational(n, d), k); }

std::vector<HalfInt> ells(int max_twice) {
  std::vector<HalfInt> out;
  for (int t = 1; t <= max_twice; t += 2) out.push_back(HalfInt::from_twice(t));
  return out;
}

// Functions t^r x^b y^d with rational r, for the ell = 3/2 Free chart.
struct PowKey {
  Rational r;
  int b;
  int d;
  bool operator<(const PowKey& o) const { return std::tie(r, b, d) < std::tie(o.r, o.b, o.d); }
  bool operator==(const PowKey& o) const { return r == o.r && b == o.b && d == o.d; }
};
using PowFunc = std::map<PowKey, CScalar>;

void add(PowFunc& f, const PowKey& k, const CScalar& v) {
  CScalar& slot = f[k];
  slot += v;
  if (slot.is_zero()) f.erase(k);
}

// t^delta g t^-delta applied to t^a x^b y^d by direct differentiation with a
// rational power of t.
PowFunc dressed_action(const WeylOp& g, const Rational& delta, int a, int b, int d) {
  PowFunc out;
  const Rational r0 = Rational(a) - delta;
  for (const auto& [k, coef] : g.terms()) {
    Rational r = r0, factor(1);
    int pb = b, pd = d;
    for (int i = 0; i < k.der[0]; ++i) {
      factor *= r;
      r -= Rational(1);
    }
    for (int i = 0; i < k.der[1]; ++i) factor *= Rational(pb--);
    for (int i = 0; i < k.der[2]; ++i) factor *= Rational(pd--);
    if (factor.is_zero()) continue;
    add(out, {r + Rational(k.var[0]) + delta, pb + k.var[1], pd + k.var[2]}, coef * CScalar(factor));
  }
  return out;
}

// The Osc chart image of t^a x^b y^d is exp((a + b/2 + 3d/2) s) u^b v^d.
PowFunc osc_action(const WeylOp& op, int a, int b, int d) {
  const Chart ch = op.chart();
  const HalfInt mu = HalfInt::from_twice(2 * a + b + 3 * d);
  const GaussFunc f = apply(op, GaussFunc::monomial(ch, CScalar(), CScalar(1), mu, {0, b, d}));
  PowFunc out;
  for (const auto& [k, v] : f.terms()) {
    const Rational r = k.expS.to_rational() - Rational(k.pow[1], 2) - Rational(3 * k.pow[2], 2);
    add(out, {r, k.pow[1], k.pow[2]}, v);
  }
  return out;
}

}  // namespace

TEST_CASE("ell 3/2 Free chart generators") {
  const GeneratorMap g = free_generators(kThreeHalf);
  const Chart ch = Chart::free(kThreeHalf);
  auto t = WeylOp::variable(ch, 0), x = WeylOp::variable(ch, 1), y = WeylOp::variable(ch, 2);
  auto dt = WeylOp::derivative(ch, 0), dx = WeylOp::derivative(ch, 1), dy = WeylOp::derivative(ch, 2);
  CHECK(g.at(GenLabel::z_zero()) ==
        -(t * dt) - x * dx * cs(1, 2) - y * dy * cs(3, 2) - WeylOp::constant(ch, CScalar(1)));
  CHECK(g.at(GenLabel::w(-kThreeHalf)) == t * t * t * dy + t * t * dx * cs(3) + t * x * cs(3, 1, 1) - y * cs(3, 1, 1));
  CHECK(g == threehalf_free_fixture());
  CHECK(delta_of(kThreeHalf) == Rational(1));
}

TEST_CASE("ell 1/2 special conformal generator") {
  const GeneratorMap g = free_generators(kHalf);
  const Chart ch = Chart::free(kHalf);
  auto t = WeylOp::variable(ch, 0), y = WeylOp::variable(ch, 1), dt = WeylOp::derivative(ch, 0);
  CHECK(g.at(GenLabel::z_minus()) == t * g.at(GenLabel::z_zero()) * cs(2) + t * t * dt - y * y * cs(1, 2, 1));
}

TEST_CASE("invalid ell") {
  CHECK_THROWS_AS(free_generators(HalfInt::from_int(1)), BadEll);
  CHECK_THROWS_AS(osc_generators(HalfInt(), Normalization::Section7), BadEll);
  CHECK_THROWS_AS(osc_generators(HalfInt::from_twice(5), Normalization::Section5), NormalizationUnavailable);
}

TEST_CASE("Osc chart generators") {
  const Chart ch = Chart::osc(kThreeHalf);
  auto u = WeylOp::variable(ch, 1), du = WeylOp::derivative(ch, 1), dv = WeylOp::derivative(ch, 2);
  const GeneratorMap s5 = osc_generators(kThreeHalf, Normalization::Section5);
  CHECK(s5.at(GenLabel::w(kHalf)) == WeylOp::exp_s(ch, -kHalf) * (dv + du - u * cs(1, 1, 1)));
  for (HalfInt ell : ells(9)) {
    const GeneratorMap s7 = osc_generators(ell, Normalization::Section7);
    CHECK(s7.at(GenLabel::z_zero()) == -WeylOp::derivative(Chart::osc(ell), 0));
  }
  const GeneratorMap s7 = osc_generators(kThreeHalf, Normalization::Section7);
  TermKey key{-kHalf, {0, 1, 0}, {0, 0, 0}};
  CHECK(s7.at(GenLabel::w(kHalf)).coefficient(key) == cs(-1, 4, 1));
}

TEST_CASE("ell 3/2 structure constants") {
  const StructureTable t = extract_structure(free_generators(kThreeHalf), BracketKind::Commutator);
  CHECK(verify_isomorphic_tables(t, threehalf_commutator_fixture()));
  CHECK(t.at(GenLabel::w(kThreeHalf), GenLabel::w(-kThreeHalf)) == AlgebraElement::single(GenLabel::c(), cs(-3)));
  CHECK(t.at(GenLabel::w(kHalf), GenLabel::w(-kHalf)) == AlgebraElement::single(GenLabel::c()));
  CHECK(t.at(GenLabel::z_plus(), GenLabel::w(kHalf)) == AlgebraElement::single(GenLabel::w(kThreeHalf)));
  CHECK(t.at(GenLabel::z_plus(), GenLabel::z_minus()) == AlgebraElement::single(GenLabel::z_zero(), cs(2)));
}

TEST_CASE("closure, gradings and central element for every ell and chart") {
  for (HalfInt ell : ells(9)) {
    INFO("ell = " << ell.to_string());
    const GeneratorMap fr = free_generators(ell);
    const GeneratorMap os = osc_generators(ell, Normalization::Section7);
    const StructureTable tf = extract_structure(fr, BracketKind::Commutator);
    const StructureTable to = extract_structure(os, BracketKind::Commutator);
    CHECK(verify_isomorphic_tables(tf, to));
    for (const GeneratorMap* g : {&fr, &os}) {
      const WeylOp& z0 = g->at(GenLabel::z_zero());
      for (const auto& [label, op] : *g) {
        CHECK(commutator(g->at(GenLabel::c()), op).is_zero());
        if (label.kind == GenLabel::Kind::C) continue;
        CHECK(degree_of(op, z0) == label.grading());
        CHECK(is_scaling_homogeneous(op, label.grading()));
      }
    }
    for (HalfInt j = kHalf; j <= ell; j += HalfInt::from_int(1)) {
      const auto& coeffs = tf.at(GenLabel::w(j), GenLabel::w(-j)).coeffs();
      REQUIRE(coeffs.size() == 1);
      CHECK(coeffs.begin()->first == GenLabel::c());
    }
  }
}

TEST_CASE("Section5 table equals the Free table") {
  const StructureTable a = extract_structure(free_generators(kThreeHalf), BracketKind::Commutator);
  const StructureTable b = extract_structure(osc_generators(kThreeHalf, Normalization::Section5), BracketKind::Commutator);
  CHECK(verify_isomorphic_tables(a, b));
  CHECK(verify_isomorphic_tables(a, a));
  CHECK_FALSE(verify_isomorphic_tables(a, extract_structure(free_generators(HalfInt::from_twice(5)), BracketKind::Commutator)));
}

TEST_CASE("brackets leaving the span are reported") {
  GeneratorMap g = free_generators(kThreeHalf);
  g.erase(GenLabel::z_zero());
  CHECK_THROWS_AS(extract_structure(g, BracketKind::Commutator), NotClosed);
  GeneratorMap h = free_generators(kThreeHalf);
  h.erase(GenLabel::w(kHalf));
  CHECK_THROWS_AS(extract_structure(h, BracketKind::Commutator), NotClosed);
}

TEST_CASE("labels round trip through text") {
  for (const auto& g : {GenLabel::z_plus(), GenLabel::z_minus(), GenLabel::c(), GenLabel::w(-kThreeHalf),
                        GenLabel::ww(kHalf, -kThreeHalf), GenLabel::omega(HalfInt::from_int(1))})
    CHECK(GenLabel::parse(g.to_string()) == g);
  CHECK(GenLabel::ww(kHalf, kThreeHalf) == GenLabel::ww(kThreeHalf, kHalf));
}

TEST_CASE("transform examples") {
  const Chart ch = Chart::osc(kThreeHalf);
  auto u = WeylOp::variable(ch, 1), v = WeylOp::variable(ch, 2);
  auto ds = WeylOp::derivative(ch, 0), du = WeylOp::derivative(ch, 1), dv = WeylOp::derivative(ch, 2);
  const GeneratorMap g = free_generators(kThreeHalf);
  const TransformSpec s5 = TransformSpec::section5();
  CHECK(transform(g.at(GenLabel::w(kThreeHalf)), s5) == WeylOp::exp_s(ch, -kThreeHalf) * dv);
  CHECK(transform(g.at(GenLabel::z_plus()), s5) ==
        WeylOp::exp_s(ch, HalfInt::from_int(-1)) *
            (ds - u * du * cs(1, 2) - v * dv * cs(3, 2) - WeylOp::constant(ch, CScalar(1)) + u * u * cs(1, 2, 1)));
  for (HalfInt ell : ells(9))
    CHECK(transform(free_generators(ell).at(GenLabel::z_zero()), TransformSpec::section7(ell)) ==
          -WeylOp::derivative(Chart::osc(ell), 0));
}

TEST_CASE("transform certification") {
  for (HalfInt ell : ells(9)) {
    INFO("ell = " << ell.to_string());
    const TransformReport r = certify_transform(ell, Normalization::Section7);
    CHECK(r.mismatches.empty());
    CHECK(r.omegas_match);
    CHECK(r.tables_identical);
  }
  const TransformReport r5 = certify_transform(kThreeHalf, Normalization::Section5);
  CHECK(r5.ok());
  CHECK(r5.matched.size() == 8);
}

TEST_CASE("transform preserves brackets pairwise") {
  for (HalfInt ell : ells(5)) {
    const TransformSpec spec = TransformSpec::section7(ell);
    const GeneratorMap g = free_generators(ell);
    for (const auto& [a, x] : g)
      for (const auto& [b, y] : g)
        CHECK(commutator(transform(x, spec), transform(y, spec)) == transform(commutator(x, y), spec));
  }
}

TEST_CASE("dressing after the change of variables matches the rational power of t") {
  const Substitution sub = change_of_variables(kThreeHalf);
  const Rational delta = delta_of(kThreeHalf);
  for (const auto& [label, g] : free_generators(kThreeHalf)) {
    INFO(label.to_string());
    const WeylOp dressed = conjugate(sub(g), Weight::linear_s(-delta));
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int d = 0; d <= 2; ++d) CHECK(osc_action(dressed, a, b, d) == dressed_action(g, delta, a, b, d));
  }
}
