#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cga/enlarged.hpp"
#include "cga/errors.hpp"
#include "cga/onshell.hpp"
#include "support.hpp"

using namespace cga;

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kOne = HalfInt::from_int(1);
const HalfInt kThreeHalf = HalfInt::from_twice(3);

CScalar cs(long n, long d = 1, int k = 0) { return CScalar::monomial(Rational(n, d), k); }

std::map<GenLabel, Multiplier> table(std::initializer_list<std::pair<GenLabel, Multiplier>> entries) {
  return {entries.begin(), entries.end()};
}

}  // namespace

TEST_CASE("printed invariant operators") {
  const Chart c5 = Chart::free(HalfInt::from_twice(5));
  auto y = [&](int a) { return WeylOp::variable(c5, a); };
  auto d = [&](int a) { return WeylOp::derivative(c5, a); };
  CHECK(omega1_free(HalfInt::from_twice(5)) == d(0) + y(1) * d(2) * cs(2) + y(2) * d(3) - d(1) * d(1) * cs(3, 2, -1));

  const Chart c3 = Chart::free(kThreeHalf);
  const WeylOp t = WeylOp::variable(c3, 0);
  const WeylOp om1 = WeylOp::derivative(c3, 0) + WeylOp::variable(c3, 1) * WeylOp::derivative(c3, 2) -
                     WeylOp::derivative(c3, 1) * WeylOp::derivative(c3, 1) * cs(1, 1, -1);
  CHECK(omega1_free(kThreeHalf) == om1);
  CHECK(omega0_free(kThreeHalf) == -(t * om1));
  const WeylOp z0 = free_generators(kThreeHalf).at(GenLabel::z_zero());
  CHECK(degree_of(omega0_free(kThreeHalf), z0) == HalfInt());
  CHECK(degree_of(omega1_free(kThreeHalf), z0) == kOne);
}

TEST_CASE("invariant equation on monomials") {
  const Chart ch = Chart::free(kThreeHalf);
  const WeylOp om1 = omega1_free(kThreeHalf);
  const WeylOp direct = WeylOp::derivative(ch, 0) + WeylOp::variable(ch, 1) * WeylOp::derivative(ch, 2) -
                        WeylOp::derivative(ch, 1) * WeylOp::derivative(ch, 1) * cs(1, 1, -1);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int d = 0; d <= 3; ++d) {
        const GaussFunc f = GaussFunc::monomial(ch, CScalar(), CScalar(1), HalfInt(), {a, b, d});
        CHECK(apply(om1, f) == testing::oracle_apply(direct, f));
      }
}

TEST_CASE("abstract combinations realize the operators") {
  const EnlargedBasis b = build_enlarged(free_generators(kThreeHalf));
  CHECK(realize(omega1_threehalf_element(), b.realized) == omega1_free(kThreeHalf));
  CHECK(realize(omega0_threehalf_element(), b.realized) == omega0_free(kThreeHalf));
}

TEST_CASE("solver recovers the degree 1 operator") {
  const OmegaSolution s3 = solve_omega1(kThreeHalf);
  CHECK(s3.kernel_dim == 1);
  CHECK(s3.element == omega1_threehalf_element());
  CHECK(s3.element.coefficient(GenLabel::ww(kThreeHalf, -kHalf)) == cs(1, 2, -1));
  CHECK(s3.element.coefficient(GenLabel::ww(kHalf, kHalf)) == cs(-1, 2, -1));

  // ww(1/2,1/2) = 2 w(1/2)^2, so the d_y^2 term -1/(2c) needs -1/(4c).
  const OmegaSolution s1 = solve_omega1(kHalf);
  AlgebraElement expected = AlgebraElement::single(GenLabel::z_plus());
  expected.add(GenLabel::ww(kHalf, kHalf), cs(-1, 4, -1));
  CHECK(s1.element == expected);
  const GeneratorMap g1 = free_generators(kHalf);
  for (HalfInt j : {kHalf, -kHalf}) CHECK(commutator(g1.at(GenLabel::w(j)), s1.op).is_zero());

  for (int t = 1; t <= 7; t += 2) {
    const HalfInt ell = HalfInt::from_twice(t);
    const OmegaSolution s = solve_omega1(ell);
    CHECK(s.kernel_dim == 1);
    CHECK(s.op == omega1_free(ell));
  }
}

TEST_CASE("Free chart multiplier tables") {
  using M = Multiplier;
  for (int t = 1; t <= 9; t += 2) {
    const HalfInt ell = HalfInt::from_twice(t);
    INFO("ell = " << ell.to_string());
    const GeneratorMap g = free_generators(ell);
    const OnShellCertificate c1 = certify_onshell(omega1_free(ell), g);
    CHECK(c1.ok());
    CHECK(c1.nonzero() == table({{GenLabel::z_minus(), M::factor(cs(2), kOne)}, {GenLabel::z_zero(), M::factor(cs(1), {})}}));
    const OnShellCertificate c0 = certify_onshell(omega0_free(ell), g);
    CHECK(c0.ok());
    CHECK(c0.nonzero() == table({{GenLabel::z_plus(), M::factor(cs(1), -kOne)}, {GenLabel::z_minus(), M::factor(cs(1), kOne)}}));
  }
  const OnShellCertificate c = certify_onshell(omega0_free(kThreeHalf), free_generators(kThreeHalf));
  CHECK(c.table.at(GenLabel::z_plus()).to_string(ChartKind::Free) == "t^-1");
  CHECK(c.table.at(GenLabel::z_minus()).to_string(ChartKind::Free) == "t");
}

TEST_CASE("Osc chart multiplier tables") {
  using M = Multiplier;
  const auto expected = table({{GenLabel::z_plus(), M::factor(cs(1), -kOne)}, {GenLabel::z_minus(), M::factor(cs(1), kOne)}});
  const OnShellCertificate s5 = certify_onshell(omega0_osc(kThreeHalf, Normalization::Section5),
                                                osc_generators(kThreeHalf, Normalization::Section5));
  CHECK(s5.nonzero() == expected);
  CHECK(s5.table.at(GenLabel::z_plus()).to_string(ChartKind::Osc) == "exp(-s)");
  for (int t = 1; t <= 9; t += 2) {
    const HalfInt ell = HalfInt::from_twice(t);
    CHECK(certify_onshell(omega0_osc(ell, Normalization::Section7), osc_generators(ell, Normalization::Section7)).nonzero() ==
          expected);
  }
}

TEST_CASE("non-proportional brackets") {
  const Chart ch = Chart::free(kThreeHalf);
  const GeneratorMap g = free_generators(kThreeHalf);
  const WeylOp x = WeylOp::variable(ch, 1);
  CHECK_THROWS_AS(certify_onshell(x, g, true), NotProportional);
  const OnShellCertificate cert = certify_onshell(x, g);
  CHECK_FALSE(cert.ok());
  CHECK(cert.table.at(GenLabel::w(kHalf)).kind == Multiplier::Kind::Fail);
}

TEST_CASE("cross relations") {
  for (int t = 1; t <= 9; t += 2) {
    const HalfInt ell = HalfInt::from_twice(t);
    CHECK(cross_relation_free(ell).is_zero());
    CHECK(cross_relation_osc(ell, Normalization::Section7).is_zero());
    const WeylOp om0 = omega0_osc(ell, Normalization::Section7);
    CHECK(omega1_osc(ell, Normalization::Section7) == -(WeylOp::exp_s(om0.chart(), -kOne) * om0));
  }
  CHECK(cross_relation_osc(kThreeHalf, Normalization::Section5).is_zero());
}

TEST_CASE("Section7 degree 0 operator has no u_1 d_u_1 term") {
  for (int t = 1; t <= 9; t += 2) {
    const HalfInt ell = HalfInt::from_twice(t);
    const Chart ch = Chart::osc(ell);
    Exponents e(ch.nvars(), 0);
    e[1] = 1;
    CHECK(omega0_osc(ell, Normalization::Section7).coefficient(TermKey{HalfInt(), e, e}).is_zero());
  }
}

TEST_CASE("off-shell centralizers") {
  const EnlargedBasis fb = build_enlarged(free_generators(kThreeHalf));
  const auto free_c = offshell_centralizer(omega1_free(kThreeHalf), fb.realized);
  std::set<GenLabel> expected;
  for (const auto& [g, _] : fb.realized)
    if (g.kind != GenLabel::Kind::ZZero && g.kind != GenLabel::Kind::ZMinus) expected.insert(g);
  CHECK(std::set<GenLabel>(free_c.begin(), free_c.end()) == expected);
  CHECK(free_c.size() == 16);

  const EnlargedBasis ob = build_enlarged(osc_generators(kThreeHalf, Normalization::Section5));
  const auto osc_c = offshell_centralizer(omega0_osc(kThreeHalf, Normalization::Section5), ob.realized);
  expected.clear();
  for (const auto& [g, _] : ob.realized)
    if (g.kind != GenLabel::Kind::ZPlus && g.kind != GenLabel::Kind::ZMinus) expected.insert(g);
  CHECK(std::set<GenLabel>(osc_c.begin(), osc_c.end()) == expected);

  GeneratorMap sub;
  for (const auto& g : free_c) sub.emplace(g, fb.realized.at(g));
  const StructureTable t = extract_structure(sub, graded_rule);
  CHECK(t.labels.size() == 16);
}
