#pragma once

#include "atiyah/lift.hpp"

#include <string>

namespace atiyah {

enum class OutputFormat { Text, Json, Latex };

/// Wire schema (bit-exact, deterministic):
///   term       {"coeff":"<num>/<den>","t":[[i,exp],...],"dt":[i,...],"word":[g,...]}
///              g is an integer >= 1 for B_g, a string name for an abelian
///              generator; rationals are always "num/den" in lowest terms.
///   LiftTuple  {"k":K,"components":[{"p":i,"q":2K-i,"terms":[...]},...],
///               "sign_convention":"delta_plus_(-1)^p_d"}
std::string lift_tuple_to_json(const LiftTuple &t);
LiftTuple lift_tuple_from_json(const std::string &text);

std::string trace_polynomial_to_json_terms(const TracePolynomial &v);

/// Tuple display with every component carrying an \underbrace{...}_{p=i}
/// label for its Cech degree.
std::string lift_tuple_to_latex(const LiftTuple &t);
std::string trace_polynomial_to_latex(const TracePolynomial &v);

} // namespace atiyah
