#include "cga/transform.hpp"

#include "cga/onshell.hpp"

namespace cga {

TransformSpec TransformSpec::section7(HalfInt ell) {
  require_half_odd(ell);
  return {ell, delta_of(ell), CScalar::monomial(Rational(-1, ell.twice() + 1), 1), Normalization::Section7};
}

TransformSpec TransformSpec::section5() {
  return {HalfInt::from_twice(3), Rational(1), CScalar::monomial(Rational(-1), 1), Normalization::Section5};
}

TransformSpec TransformSpec::for_normalization(HalfInt ell, Normalization norm) {
  if (norm == Normalization::Section7) return section7(ell);
  require_half_odd(ell);
  if (ell != HalfInt::from_twice(3))
    throw NormalizationUnavailable("normalization " + to_string(norm) + " exists only at ell = 3/2");
  return section5();
}

Substitution change_of_variables(HalfInt ell) {
  const Chart src = Chart::free(ell);
  const Chart dst = Chart::osc(ell);
  const int L = src.space_dim();
  std::vector<WeylOp> vars, ders;

  vars.push_back(WeylOp::exp_s(dst, HalfInt::from_int(1)));
  WeylOp dt = WeylOp::derivative(dst, 0);
  for (int a = 1; a <= L; ++a)
    dt -= WeylOp::variable(dst, a) * WeylOp::derivative(dst, a) * CScalar(Rational(2 * a - 1, 2));
  ders.push_back(WeylOp::exp_s(dst, HalfInt::from_int(-1)) * dt);

  for (int a = 1; a <= L; ++a) {
    const HalfInt w = HalfInt::from_twice(2 * a - 1);
    vars.push_back(WeylOp::exp_s(dst, w) * WeylOp::variable(dst, a));
    ders.push_back(WeylOp::exp_s(dst, -w) * WeylOp::derivative(dst, a));
  }
  return Substitution(src, dst, std::move(vars), std::move(ders));
}

WeylOp transform(const WeylOp& g, const TransformSpec& spec) {
  // The substitution is validated once per ell.
  thread_local std::map<std::int64_t, Substitution> cache;
  auto it = cache.find(spec.ell.twice());
  if (it == cache.end()) it = cache.emplace(spec.ell.twice(), change_of_variables(spec.ell)).first;
  const WeylOp step_a = it->second(g);
  const WeylOp step_i = conjugate(step_a, Weight::linear_s(-spec.delta));
  return conjugate(step_i, Weight::gaussian(spec.gaussian_kappa));
}

TransformReport certify_transform(HalfInt ell, Normalization norm) {
  const TransformSpec spec = TransformSpec::for_normalization(ell, norm);
  TransformReport rep;
  rep.ell = ell;
  rep.normalization = spec.normalization;

  const GeneratorMap free = free_generators(ell);
  const GeneratorMap printed = osc_generators(ell, spec.normalization);
  GeneratorMap mapped;
  for (const auto& [g, op] : free) {
    WeylOp image = transform(op, spec);
    const WeylOp diff = image - printed.at(g);
    if (diff.is_zero()) rep.matched.push_back(g.to_string());
    else rep.mismatches.push_back(g.to_string() + ": " + diff.to_string());
    mapped.emplace(g, std::move(image));
  }

  const WeylOp om0 = transform(omega0_free(ell), spec);
  const WeylOp om1 = transform(omega1_free(ell), spec);
  rep.omegas_match = om0 == omega0_osc(ell, spec.normalization) && om1 == omega1_osc(ell, spec.normalization);

  try {
    rep.tables_identical = verify_isomorphic_tables(extract_structure(free, BracketKind::Commutator),
                                                    extract_structure(mapped, BracketKind::Commutator));
  } catch (const NotClosed&) {
    rep.tables_identical = false;
  }
  return rep;
}

}  // namespace cga
