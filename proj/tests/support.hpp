#pragma once

// Random operators and functions, an independent differentiation oracle and
// the engine property checks shared by the unit tests and the acceptance run.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cga/transform.hpp"
#include "cga/weyl.hpp"

namespace cga::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// One or two terms a c^k with k in {-1, 0, 1} and small nonzero a.
inline CScalar random_scalar(std::mt19937_64& rng) {
  CScalar s;
  const int n = uniform(rng, 1, 2);
  for (int i = 0; i < n; ++i) {
    int num = uniform(rng, -3, 3);
    if (num == 0) num = 1;
    s += CScalar::monomial(Rational(num, uniform(rng, 1, 3)), uniform(rng, -1, 1));
  }
  return s.is_zero() ? CScalar(1) : s;
}

inline Exponents random_exponents(std::mt19937_64& rng, int n, int max_total, int first) {
  Exponents e(n, 0);
  const int total = uniform(rng, 0, max_total);
  for (int k = 0; k < total; ++k) e[uniform(rng, first, n - 1)] += 1;
  return e;
}

/// Up to max_terms terms with variable and derivative orders at most max_order.
/// Osc chart terms carry exp(mu s) with mu in {-1, -1/2, 0, 1/2, 1} and never a
/// polynomial power of s.
inline WeylOp random_op(const Chart& ch, std::mt19937_64& rng, int max_terms = 4, int max_order = 3) {
  const bool osc = ch.kind == ChartKind::Osc;
  WeylOp op(ch);
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    const HalfInt mu = osc ? HalfInt::from_twice(uniform(rng, -2, 2)) : HalfInt();
    const Exponents var = random_exponents(rng, ch.nvars(), max_order, osc ? 1 : 0);
    const Exponents der = random_exponents(rng, ch.nvars(), max_order, 0);
    op += WeylOp::monomial(ch, random_scalar(rng), mu, var, der);
  }
  return op;
}

inline GaussFunc random_func(const Chart& ch, std::mt19937_64& rng, const CScalar& kappa, int max_terms = 3) {
  const bool osc = ch.kind == ChartKind::Osc;
  GaussFunc f(ch, kappa);
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    const HalfInt mu = osc ? HalfInt::from_twice(uniform(rng, -3, 3)) : HalfInt();
    f = f + GaussFunc::monomial(ch, kappa, random_scalar(rng), mu, random_exponents(rng, ch.nvars(), 3, osc ? 1 : 0));
  }
  return f;
}

/// Applies op to a function with kappa = 0 by direct differentiation of each
/// monomial: falling factorials for polynomial variables, mu^k for
/// d_s^k exp(mu s). Uses neither the operator product nor cga::apply.
inline GaussFunc oracle_apply(const WeylOp& op, const GaussFunc& f) {
  const Chart& ch = op.chart();
  const bool osc = ch.kind == ChartKind::Osc;
  GaussFunc out(ch, CScalar());
  for (const auto& [k, a] : op.terms()) {
    for (const auto& [fk, b] : f.terms()) {
      Rational factor(1);
      Exponents pow = fk.pow;
      bool vanishes = false;
      for (int i = 0; i < ch.nvars() && !vanishes; ++i) {
        for (int r = 0; r < k.der[i]; ++r) {
          if (osc && i == 0) {
            factor *= fk.expS.to_rational();
          } else if (pow[i] == 0) {
            vanishes = true;
            break;
          } else {
            factor *= Rational(pow[i]);
            pow[i] -= 1;
          }
        }
      }
      if (vanishes || factor.is_zero()) continue;
      for (int i = 0; i < ch.nvars(); ++i) pow[i] += k.var[i];
      out.add_term(FuncKey{fk.expS + k.expS, pow}, a * b * CScalar(factor));
    }
  }
  return out;
}

inline Chart chart_for(int index) {
  // Alternates Free and Osc charts over ell = 1/2, 3/2, 5/2.
  const HalfInt ell = HalfInt::from_twice(1 + 2 * ((index / 2) % 3));
  return index % 2 == 0 ? Chart::free(ell) : Chart::osc(ell);
}

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
};

inline PropertyResult check_associativity(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  PropertyResult r{"associativity", 0, 0};
  for (int i = 0; i < n; ++i) {
    const Chart ch = chart_for(i);
    const WeylOp a = random_op(ch, rng), b = random_op(ch, rng), d = random_op(ch, rng);
    ++r.instances;
    if (!((a * b) * d == a * (b * d))) ++r.failures;
  }
  return r;
}

inline PropertyResult check_jacobi(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  PropertyResult r{"jacobi", 0, 0};
  for (int i = 0; i < n; ++i) {
    const Chart ch = chart_for(i);
    const WeylOp a = random_op(ch, rng), b = random_op(ch, rng), d = random_op(ch, rng);
    ++r.instances;
    const WeylOp sum = commutator(a, commutator(b, d)) + commutator(b, commutator(d, a)) + commutator(d, commutator(a, b));
    if (!sum.is_zero()) ++r.failures;
  }
  return r;
}

inline PropertyResult check_substitution(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  PropertyResult r{"substitution homomorphism", 0, 0};
  for (int i = 0; i < n; ++i) {
    const HalfInt ell = HalfInt::from_twice(1 + 2 * (i % 3));
    const Substitution sub = change_of_variables(ell);
    const Chart ch = Chart::free(ell);
    const WeylOp a = random_op(ch, rng), b = random_op(ch, rng);
    ++r.instances;
    if (!(sub(a * b) == sub(a) * sub(b))) ++r.failures;
  }
  return r;
}

inline PropertyResult check_apply(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  PropertyResult r{"apply compatibility", 0, 0};
  for (int i = 0; i < n; ++i) {
    const Chart ch = chart_for(i);
    const CScalar kappa = i % 3 == 0 ? CScalar() : random_scalar(rng);
    const WeylOp a = random_op(ch, rng), b = random_op(ch, rng);
    const GaussFunc f = random_func(ch, rng, kappa);
    ++r.instances;
    if (!(apply(a * b, f) == apply(a, apply(b, f)))) ++r.failures;
  }
  return r;
}

}  // namespace cga::testing
