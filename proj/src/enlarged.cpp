#include "cga/enlarged.hpp"

#include <random>
#include <set>

namespace cga {

EnlargedBasis build_enlarged(const GeneratorMap& gens) {
  EnlargedBasis basis;
  std::vector<HalfInt> ws;
  for (const auto& [g, op] : gens) {
    basis.realized.emplace(g, op);
    if (g.kind == GenLabel::Kind::W) {
      basis.odd.push_back(g);
      ws.push_back(g.i);
    } else {
      basis.even.push_back(g);
    }
  }
  if (ws.empty()) throw std::invalid_argument("generator map has no w_j");
  basis.ell = ws.back();
  for (std::size_t a = 0; a < ws.size(); ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      const GenLabel lab = GenLabel::ww(ws[a], ws[b]);
      basis.realized.emplace(lab, anticommutator(gens.at(GenLabel::w(ws[a])), gens.at(GenLabel::w(ws[b]))));
      basis.even.push_back(lab);
    }
  }
  return basis;
}

BracketKind graded_rule(const GenLabel& a, const GenLabel& b) {
  return a.is_odd() && b.is_odd() ? BracketKind::Anticommutator : BracketKind::Commutator;
}

JacobiOptions default_jacobi_options(HalfInt ell, std::uint64_t seed) {
  JacobiOptions o;
  o.seed = seed;
  o.exhaustive = ell <= HalfInt::from_twice(3);
  if (!o.exhaustive) {
    // labels entering the degree 0 and degree 1 invariant operators
    o.targeted = {GenLabel::z_plus(), GenLabel::z_zero()};
    for (auto i = HalfInt::from_twice(1); i <= ell; i += HalfInt::from_int(1)) {
      o.targeted.push_back(GenLabel::ww(i, -i));
      if (HalfInt::from_int(1) - i >= -ell) o.targeted.push_back(GenLabel::ww(i, HalfInt::from_int(1) - i));
    }
  }
  return o;
}

namespace {

AlgebraElement bracket(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [g, cg] : x.coeffs())
    for (const auto& [h, ch] : y.coeffs()) out = out + t.at(g, h) * (cg * ch);
  return out;
}

template <typename F>
void for_each_triple(const std::vector<GenLabel>& labels, const JacobiOptions& opts, F&& f) {
  if (opts.exhaustive) {
    for (const auto& a : labels)
      for (const auto& b : labels)
        for (const auto& d : labels) f(a, b, d);
    return;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (std::size_t k = 0; k < opts.samples; ++k) f(labels[pick(rng)], labels[pick(rng)], labels[pick(rng)]);
  const std::set<GenLabel> present(labels.begin(), labels.end());
  for (const auto& a : opts.targeted) {
    if (!present.count(a)) continue;
    for (const auto& b : labels)
      for (const auto& d : labels) f(a, b, d);
  }
}

ClosureReport check_jacobi(StructureTable table, const JacobiOptions& opts, bool graded) {
  ClosureReport rep;
  rep.table = std::move(table);
  for_each_triple(rep.table.labels, opts, [&](const GenLabel& a, const GenLabel& b, const GenLabel& d) {
    ++rep.triples_checked;
    const AlgebraElement r = jacobi_residual(rep.table, a, b, d, graded);
    if (!r.is_zero())
      rep.jacobi_failures.push_back("(" + a.to_string() + ", " + b.to_string() + ", " + d.to_string() +
                                    "): " + r.to_string());
  });
  if (!rep.jacobi_failures.empty())
    throw JacobiFailure(std::to_string(rep.jacobi_failures.size()) + " Jacobi failures, first " +
                        rep.jacobi_failures.front());
  return rep;
}

}  // namespace

AlgebraElement jacobi_residual(const StructureTable& table, const GenLabel& a, const GenLabel& b,
                               const GenLabel& d, bool graded) {
  // [a,[b,d]] = [[a,b],d] + (-1)^{|a||b|} [b,[a,d]]
  const AlgebraElement A = AlgebraElement::single(a);
  const AlgebraElement B = AlgebraElement::single(b);
  const AlgebraElement lhs = bracket(table, A, table.at(b, d));
  const AlgebraElement t1 = bracket(table, table.at(a, b), AlgebraElement::single(d));
  const AlgebraElement t2 = bracket(table, B, table.at(a, d));
  const bool minus = graded && a.is_odd() && b.is_odd();
  return minus ? lhs - t1 + t2 : lhs - t1 - t2;
}

ClosureReport verify_ecga_closure(const EnlargedBasis& basis, const JacobiOptions& opts) {
  return check_jacobi(extract_structure(basis.realized, BracketKind::Commutator), opts, false);
}

ClosureReport verify_scga_graded(const EnlargedBasis& basis, const JacobiOptions& opts,
                                 const StructureTable* commutators) {
  StructureTable table = extract_structure(basis.realized, graded_rule, commutators);
  for (const auto& [pair, x] : table.brackets) {
    const bool odd = pair.first.is_odd() != pair.second.is_odd();
    for (const auto& [g, _] : x.coeffs())
      if (g.is_odd() != odd)
        throw GradingViolation("bracket of (" + pair.first.to_string() + ", " + pair.second.to_string() +
                               ") has component " + g.to_string() + " of the wrong parity");
  }
  return check_jacobi(std::move(table), opts, true);
}

DualityReport duality_report(const EnlargedBasis& basis, const JacobiOptions& opts) {
  DualityReport rep;
  rep.ell = basis.ell;
  rep.even_dim = basis.even.size();
  rep.odd_dim = basis.odd.size();
  rep.ecga_dim = basis.realized.size();

  const GeneratorMap* seen_by_ecga = &basis.realized;
  const ClosureReport e = verify_ecga_closure(basis, opts);
  const GeneratorMap* seen_by_scga = &basis.realized;
  const ClosureReport s = verify_scga_graded(basis, opts, &e.table);
  rep.same_operators = seen_by_ecga == seen_by_scga;
  rep.ecga_triples = e.triples_checked;
  rep.scga_triples = s.triples_checked;

  std::set<GenLabel> sp, osp;
  for (const auto& g : basis.even)
    if (g.kind == GenLabel::Kind::WW) sp.insert(g);
  osp = sp;
  osp.insert(basis.odd.begin(), basis.odd.end());
  rep.sp_dim = sp.size();
  rep.osp_dim = osp.size();

  auto closed = [](const StructureTable& t, const std::set<GenLabel>& sector) {
    for (const auto& a : sector)
      for (const auto& b : sector)
        for (const auto& [g, _] : t.at(a, b).coeffs())
          if (!sector.count(g)) return false;
    return true;
  };
  rep.sp_closed = closed(e.table, sp);
  rep.osp_closed = closed(s.table, osp);
  return rep;
}

}  // namespace cga
