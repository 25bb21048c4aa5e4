#pragma once

// JSON, LaTeX and plain-text forms of scalars, operators and functions.

#include <string>
#include <vector>

#include "cga/realizations.hpp"
#include "json.hpp"

namespace cga {

using Json = nlohmann::ordered_json;

/// Exact fraction string such as "3/2" or "5". Throws BadEll unless the value
/// is a positive half-odd-integer, ParseError on malformed text.
HalfInt parse_ell(const std::string& text);

/// Display names: index 0 is t or s, then the space variables. At ell = 3/2
/// the space variables are x, y (Free) and u, v (Osc); otherwise y_a, u_a.
struct Notation {
  std::vector<std::string> names;
  std::vector<std::string> latex_names;
  std::string symbol = "c";
};
Notation notation_for(const Chart& chart, const std::string& symbol = "c");

Json to_json(const Rational& r);
Json to_json(HalfInt h);
Json to_json(const CScalar& s);
Json to_json(const WeylOp& op);
Json to_json(const GaussFunc& f);
Json to_json(const AlgebraElement& x);

Rational rational_from_json(const Json& j);
CScalar scalar_from_json(const Json& j);
/// Throws ChartMismatch when the encoded chart differs from `chart`.
WeylOp op_from_json(const Json& j, const Chart& chart);

std::string to_text(const CScalar& s, const std::string& symbol = "c");
std::string to_text(const WeylOp& op, const Notation& n);
std::string to_text(const GaussFunc& f, const Notation& n);

std::string to_latex(const CScalar& s, const std::string& symbol = "c");
std::string to_latex(const WeylOp& op, const Notation& n);
std::string to_latex(const GaussFunc& f, const Notation& n);
std::string label_latex(const GenLabel& g);

}  // namespace cga
