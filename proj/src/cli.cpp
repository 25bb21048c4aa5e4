#include "cga/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cga/enlarged.hpp"
#include "cga/errors.hpp"
#include "cga/onshell.hpp"
#include "cga/serialize.hpp"
#include "cga/spectrum.hpp"
#include "cga/transform.hpp"

namespace cga {

namespace {

struct Config {
  std::string ell_text = "3/2";
  std::string chart = "free";
  std::string normalization = "s7";
  std::string format = "json";
  int max_degree = 6;
  int max_total = 6;
  bool m_form = false;
  std::uint64_t seed = 1;
  std::string n_text;
  HalfInt ell;
  Normalization norm = Normalization::Section7;
};

// Raised for malformed input detected after CLI11 parsing.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Normalization parse_norm(const std::string& s) {
  if (s == "s5") return Normalization::Section5;
  if (s == "s6") return Normalization::Section6;
  return Normalization::Section7;
}

std::string dump(const Json& j) { return j.dump(2); }

Json error_json(const Error& e) { return Json{{"error", e.kind()}, {"message", e.what()}}; }

std::vector<int> parse_multi_index(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(ch); }))
      throw Usage("--n must be a comma separated list of non-negative integers, got " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw Usage("--n is required");
  return out;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

// ---------------------------------------------------------------------------
// Queries

int cmd_gens(const Config& cfg, std::ostream& out) {
  const bool osc = cfg.chart == "osc";
  const GeneratorMap gens = osc ? osc_generators(cfg.ell, cfg.norm) : free_generators(cfg.ell);
  const Notation n = notation_for(osc ? Chart::osc(cfg.ell) : Chart::free(cfg.ell));
  if (cfg.format == "json") {
    Json g = Json::object();
    for (const auto& [label, op] : gens) g[label.to_string()] = to_json(op);
    Json j{{"ell", cfg.ell.to_string()}, {"chart", cfg.chart}};
    if (osc) j["normalization"] = to_string(cfg.norm);
    j["generators"] = g;
    out << dump(j) << "\n";
    return 0;
  }
  for (const auto& [label, op] : gens) {
    if (cfg.format == "latex")
      out << label_latex(label) << " = " << to_latex(op, n) << "\n";
    else
      out << label.to_string() << " = " << to_text(op, n) << "\n";
  }
  return 0;
}

int cmd_hamiltonian(const Config& cfg, std::ostream& out) {
  if (cfg.m_form && cfg.norm != Normalization::Section7) throw Usage("--m-form requires --normalization s7");
  WeylOp h = hamiltonian(cfg.ell, cfg.norm);
  if (cfg.m_form) h = to_m_form(h, cfg.ell);
  const Notation n = notation_for(h.chart(), cfg.m_form ? "m" : "c");
  const std::string name = "H^{(" + cfg.ell.to_string() + ")}";
  if (cfg.format == "latex") {
    out << name << " = " << to_latex(h, n) << "\n";
  } else if (cfg.format == "text") {
    out << "H(" << cfg.ell.to_string() << ") = " << to_text(h, n) << "\n";
  } else {
    const Json j{{"ell", cfg.ell.to_string()},
                 {"normalization", to_string(cfg.norm)},
                 {"symbol", n.symbol},
                 {"vacuumEnergy", to_json(osc_system(cfg.ell, cfg.norm).vacuum_energy)},
                 {"text", to_text(h, n)},
                 {"latex", to_latex(h, n)},
                 {"operator", to_json(h)}};
    out << dump(j) << "\n";
  }
  return 0;
}

Json record_json(const SpectrumRecord& r) {
  return Json{{"n", r.n}, {"energy", to_json(r.energy)}, {"verified", r.verified}};
}

int cmd_spectrum(const Config& cfg, std::ostream& out) {
  if (cfg.max_total < 0) throw Usage("--max-total must be non-negative");
  const auto recs = ladder_spectrum(cfg.ell, cfg.norm, cfg.max_total);
  bool ok = true;
  for (const auto& r : recs) ok = ok && r.verified && r.energy == predicted_energy(cfg.ell, cfg.norm, r.n);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(record_json(r));
    out << dump(arr) << "\n";
  } else {
    for (const auto& r : recs) {
      std::string idx;
      for (int k : r.n) idx += (idx.empty() ? "" : ",") + std::to_string(k);
      out << "(" << idx << ") " << r.energy.to_string() << (r.verified ? "" : " unverified") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_eigenstate(const Config& cfg, std::ostream& out) {
  const std::vector<int> n = parse_multi_index(cfg.n_text);
  const SpectrumRecord r = [&] {
    try {
      return ladder_state(cfg.ell, cfg.norm, n);
    } catch (const std::invalid_argument& e) {
      throw Usage(e.what());
    }
  }();
  const Notation nt = notation_for(r.state.chart());
  if (cfg.format == "latex") {
    out << to_latex(r.state, nt) << "\n";
  } else if (cfg.format == "text") {
    out << to_text(r.state, nt) << "\n";
  } else {
    Json j = record_json(r);
    j["state"] = to_json(r.state);
    j["latex"] = to_latex(r.state, nt);
    out << dump(j) << "\n";
  }
  return r.verified ? 0 : 1;
}

int cmd_matrix(const Config& cfg, std::ostream& out) {
  if (cfg.max_degree < 0) throw Usage("--max-degree must be non-negative");
  ExactMatrix m;
  try {
    m = matrix_oracle(cfg.ell, cfg.max_degree);
  } catch (const Error& e) {
    out << dump(error_json(e)) << "\n";
    return 1;
  }
  if (cfg.format != "json") {
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
      std::string idx;
      for (std::size_t a = 1; a < m.basis[i].size(); ++a) idx += (idx.empty() ? "" : ",") + std::to_string(m.basis[i][a]);
      out << "(" << idx << ") " << m.diagonal[i].to_string() << "\n";
    }
    return 0;
  }
  Json basis = Json::array();
  for (const auto& b : m.basis) basis.push_back(Exponents(b.begin() + 1, b.end()));
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.entries.size(); ++r)
    for (std::size_t c = 0; c < m.entries[r].size(); ++c)
      if (!m.entries[r][c].is_zero()) entries.push_back({{"row", r}, {"col", c}, {"coef", to_json(m.entries[r][c])}});
  out << dump(Json{{"ell", cfg.ell.to_string()},
                   {"maxDegree", cfg.max_degree},
                   {"basis", basis},
                   {"diagonal", rational_list(m.diagonal)},
                   {"entries", entries}})
      << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// Verification suites

// Shared between suites so `verify all` extracts each table once.
struct Context {
  const Config& cfg;
  std::optional<DualityReport> duality;
  std::optional<Json> duality_error;

  const DualityReport* get_duality() {
    if (!duality && !duality_error) {
      try {
        duality = duality_report(build_enlarged(free_generators(cfg.ell)), default_jacobi_options(cfg.ell, cfg.seed));
      } catch (const Error& e) {
        duality_error = error_json(e);
      }
    }
    return duality ? &*duality : nullptr;
  }
};

Json suite(const std::string& name, const std::function<void(Json&)>& body) {
  Json j{{"suite", name}, {"ok", true}};
  try {
    body(j);
  } catch (const Error& e) {
    j["ok"] = false;
    j["error"] = e.kind();
    j["message"] = e.what();
  }
  return j;
}

void require(Json& j, bool cond, const std::string& what) {
  if (cond) return;
  j["ok"] = false;
  j["failures"].push_back(what);
}

Rational ell_poly(HalfInt ell, long a, long b, long c) {
  const Rational l = ell.to_rational();
  return Rational(a) * l * l + Rational(b) * l + Rational(c);
}

Json suite_closure(Context& ctx) {
  return suite("closure", [&](Json& j) {
    if (ctx.cfg.ell == HalfInt::from_twice(3)) {
      const StructureTable t = extract_structure(free_generators(ctx.cfg.ell), BracketKind::Commutator);
      const bool match = verify_isomorphic_tables(t, threehalf_commutator_fixture());
      j["fixtureMatches"] = match;
      require(j, match, "structure constants differ from the printed table");
    }
    const DualityReport* d = ctx.get_duality();
    if (!d) {
      j["ok"] = false;
      j["error"] = *ctx.duality_error;
      return;
    }
    j["ecgaDim"] = d->ecga_dim;
    j["triples"] = d->ecga_triples;
    j["jacobiFailures"] = Json::array();
  });
}

Json suite_jacobi(Context& ctx) {
  return suite("jacobi", [&](Json& j) {
    const DualityReport* d = ctx.get_duality();
    if (!d) {
      j["ok"] = false;
      j["error"] = *ctx.duality_error;
      return;
    }
    j["exhaustive"] = default_jacobi_options(ctx.cfg.ell, ctx.cfg.seed).exhaustive;
    j["seed"] = ctx.cfg.seed;
    j["commutatorTriples"] = d->ecga_triples;
    j["gradedTriples"] = d->scga_triples;
    j["jacobiFailures"] = Json::array();
  });
}

Json suite_duality(Context& ctx) {
  return suite("duality", [&](Json& j) {
    const DualityReport* d = ctx.get_duality();
    if (!d) {
      j["ok"] = false;
      j["error"] = *ctx.duality_error;
      return;
    }
    const HalfInt l = ctx.cfg.ell;
    j["evenDim"] = d->even_dim;
    j["oddDim"] = d->odd_dim;
    j["ecgaDim"] = d->ecga_dim;
    j["spDim"] = d->sp_dim;
    j["ospDim"] = d->osp_dim;
    j["spClosed"] = d->sp_closed;
    j["ospClosed"] = d->osp_closed;
    j["sameOperators"] = d->same_operators;
    j["jacobiFailures"] = d->jacobi_failures;
    require(j, d->ok(), "duality report not green");
    require(j, Rational(static_cast<long>(d->even_dim)) == ell_poly(l, 2, 3, 5), "even dimension");
    require(j, Rational(static_cast<long>(d->odd_dim)) == ell_poly(l, 0, 2, 1), "odd dimension");
    require(j, Rational(static_cast<long>(d->ecga_dim)) == ell_poly(l, 2, 5, 6), "ecga dimension");
  });
}

Json certificate_json(const OnShellCertificate& cert, ChartKind chart) {
  Json j = Json::object();
  for (const auto& [g, m] : cert.table) j[g.to_string()] = m.to_string(chart);
  return j;
}

void check_certificate(Json& j, const std::string& name, const WeylOp& omega, const GeneratorMap& gens,
                       const std::map<GenLabel, Multiplier>& expected) {
  const OnShellCertificate cert = certify_onshell(omega, gens);
  j[name] = certificate_json(cert, omega.chart().kind);
  require(j, cert.ok() && cert.nonzero() == expected, name + " multiplier table");
}

Json suite_onshell(Context& ctx) {
  return suite("onshell", [&](Json& j) {
    const HalfInt ell = ctx.cfg.ell;
    const HalfInt one = HalfInt::from_int(1);
    const bool osc = ctx.cfg.chart == "osc";
    j["chart"] = ctx.cfg.chart;
    const EnlargedBasis basis = build_enlarged(osc ? osc_generators(ell, ctx.cfg.norm) : free_generators(ell));
    const GeneratorMap gens = osc ? osc_generators(ell, ctx.cfg.norm) : free_generators(ell);
    WeylOp centralized = osc ? omega0_osc(ell, ctx.cfg.norm) : omega1_free(ell);
    if (!osc) {
      using M = Multiplier;
      check_certificate(j, "omega1", omega1_free(ell), gens,
                        {{GenLabel::z_minus(), M::factor(CScalar(2), one)}, {GenLabel::z_zero(), M::factor(CScalar(1), {})}});
      check_certificate(j, "omega0", omega0_free(ell), gens,
                        {{GenLabel::z_plus(), M::factor(CScalar(1), -one)}, {GenLabel::z_minus(), M::factor(CScalar(1), one)}});
      const OmegaSolution sol = solve_omega1(ell);
      j["solverKernelDim"] = sol.kernel_dim;
      j["solverElement"] = to_json(sol.element);
      require(j, sol.kernel_dim == 1 && sol.op == omega1_free(ell), "solver does not recover omega1");
      require(j, cross_relation_free(ell).is_zero(), "[omega1, omega0] + omega1 != 0");
      if (ell == HalfInt::from_twice(3)) {
        const bool m1 = realize(omega1_threehalf_element(), basis.realized) == omega1_free(ell);
        const bool m0 = realize(omega0_threehalf_element(), basis.realized) == omega0_free(ell);
        j["abstractMatches"] = m1 && m0;
        require(j, m1 && m0, "abstract combinations do not realize to the invariant operators");
      }
    } else {
      using M = Multiplier;
      check_certificate(j, "omega0", omega0_osc(ell, ctx.cfg.norm), gens,
                        {{GenLabel::z_plus(), M::factor(CScalar(1), -one)}, {GenLabel::z_minus(), M::factor(CScalar(1), one)}});
      require(j, cross_relation_osc(ell, ctx.cfg.norm).is_zero(), "[omega0, omega1] - omega1 != 0");
    }
    const std::vector<GenLabel> cen = offshell_centralizer(centralized, basis.realized);
    Json names = Json::array();
    for (const auto& g : cen) names.push_back(g.to_string());
    j["centralizer"] = names;
    j["centralizerDim"] = cen.size();
    require(j, cen.size() + 2 == basis.realized.size(), "centralizer is not the complement of two generators");
    if (ell <= HalfInt::from_twice(5)) {
      GeneratorMap sub;
      for (const auto& g : cen) sub.emplace(g, basis.realized.at(g));
      extract_structure(sub, graded_rule);
      j["centralizerClosed"] = true;
    }
  });
}

Json suite_transform(Context& ctx) {
  return suite("transform", [&](Json& j) {
    std::vector<Normalization> norms{Normalization::Section7};
    if (ctx.cfg.ell == HalfInt::from_twice(3)) norms.push_back(Normalization::Section5);
    Json reports = Json::array();
    for (Normalization n : norms) {
      const TransformReport r = certify_transform(ctx.cfg.ell, n);
      reports.push_back({{"normalization", to_string(n)},
                         {"matched", r.matched},
                         {"mismatches", r.mismatches},
                         {"omegasMatch", r.omegas_match},
                         {"tablesIdentical", r.tables_identical}});
      require(j, r.ok(), "transform " + to_string(n));
    }
    j["reports"] = reports;
  });
}

Json suite_spectrum(Context& ctx) {
  return suite("spectrum", [&](Json& j) {
    const HalfInt ell = ctx.cfg.ell;
    const Normalization s7 = Normalization::Section7;
    const auto recs = ladder_spectrum(ell, s7, ctx.cfg.max_total);
    std::size_t bad = 0;
    for (const auto& r : recs)
      if (!r.verified || r.energy != predicted_energy(ell, s7, r.n)) ++bad;
    j["states"] = recs.size();
    require(j, bad == 0, std::to_string(bad) + " ladder states off the energy formula");

    const ExactMatrix m = matrix_oracle(ell, ctx.cfg.max_degree);
    std::vector<Rational> diag = m.diagonal, predicted;
    for (const auto& b : m.basis) predicted.push_back(predicted_energy(ell, s7, Exponents(b.begin() + 1, b.end())));
    std::sort(diag.begin(), diag.end());
    std::sort(predicted.begin(), predicted.end());
    j["matrixSize"] = m.basis.size();
    require(j, diag == predicted, "matrix diagonal differs from the energy formula");

    const LadderReport lr = ladder_relations(ell, s7);
    j["ladderFailures"] = lr.failures;
    require(j, lr.ok(), "ladder relations");
    const ReductionReport red = harmonic_reduction(ell);
    j["reductionConstant"] = to_json(red.constant);

    if (ell == HalfInt::from_twice(3)) {
      const Normalization s6 = Normalization::Section6;
      Json fixture = Json::array();
      for (const auto& p : printed_threehalf_states()) {
        const SpectrumRecord r = ladder_state(ell, s6, {p.m, p.n});
        const bool same = r.verified && r.energy == p.energy && r.state.ratio_to(p.state).has_value();
        fixture.push_back({{"m", p.m}, {"n", p.n}, {"energy", to_json(p.energy)}, {"matches", same}});
        require(j, same, "printed state (" + std::to_string(p.m) + "," + std::to_string(p.n) + ")");
      }
      j["printedStates"] = fixture;
      require(j, osc_system(ell, s6).vacuum_energy == Rational(1), "vacuum energy");
      require(j, section6_hamiltonian_residual().is_zero(), "Hamiltonian as ladder bilinear");
    }
  });
}

int cmd_verify(const Config& cfg, const std::string& which, std::ostream& out) {
  Context ctx{cfg, {}, {}};
  std::vector<Json> suites;
  const bool all = which == "all";
  if (all || which == "closure") suites.push_back(suite_closure(ctx));
  if (all || which == "jacobi") suites.push_back(suite_jacobi(ctx));
  if (all || which == "duality") suites.push_back(suite_duality(ctx));
  if (all || which == "onshell") {
    if (all && cfg.chart == "free") {
      suites.push_back(suite_onshell(ctx));
      Config osc = cfg;
      osc.chart = "osc";
      Context octx{osc, {}, {}};
      suites.push_back(suite_onshell(octx));
    } else {
      suites.push_back(suite_onshell(ctx));
    }
  }
  if (all || which == "transform") suites.push_back(suite_transform(ctx));
  if (all || which == "spectrum") suites.push_back(suite_spectrum(ctx));
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.at("ok").get<bool>();
  out << dump(Json{{"ell", cfg.ell.to_string()}, {"ok", ok}, {"suites", suites}}) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact computer algebra for conformal Galilei realizations", "cga"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--ell", cfg.ell_text, "ell as an exact fraction, e.g. 3/2");
  app.add_option("--chart", cfg.chart)->check(CLI::IsMember({"free", "osc"}));
  app.add_option("--normalization", cfg.normalization)->check(CLI::IsMember({"s5", "s6", "s7"}));
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"json", "latex", "text"}));
  app.add_option("--max-degree", cfg.max_degree);
  app.add_option("--max-total", cfg.max_total);
  app.add_flag("--m-form", cfg.m_form, "Hamiltonian coefficients in m = -c/(2 ell + 1)");
  app.add_option("--seed", cfg.seed, "seed of the sampled Jacobi checks");

  auto* gens = app.add_subcommand("gens", "realized generators");
  auto* ham = app.add_subcommand("hamiltonian", "oscillator Hamiltonian");
  auto* spec = app.add_subcommand("spectrum", "ladder eigenvalues");
  auto* eig = app.add_subcommand("eigenstate", "one ladder eigenstate");
  eig->add_option("--n", cfg.n_text, "multi-index, e.g. 1,0")->required();
  auto* mat = app.add_subcommand("matrix", "triangular matrix of H");
  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->require_subcommand(1);
  std::string which;
  for (const char* s : {"closure", "jacobi", "duality", "onshell", "transform", "spectrum", "all"})
    ver->add_subcommand(s)->callback([&which, s] { which = s; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    cfg.ell = parse_ell(cfg.ell_text);
    cfg.norm = parse_norm(cfg.normalization);
    if (*gens) return cmd_gens(cfg, out);
    if (*ham) return cmd_hamiltonian(cfg, out);
    if (*spec) return cmd_spectrum(cfg, out);
    if (*eig) return cmd_eigenstate(cfg, out);
    if (*mat) return cmd_matrix(cfg, out);
    if (*ver) return cmd_verify(cfg, which, out);
  } catch (const BadEll& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const NormalizationUnavailable& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << dump(error_json(e)) << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cga
