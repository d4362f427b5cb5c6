#pragma once

// Text forms used by the CLI and the Python module.
//
//   ideal    := "(" [poly ("," poly)*] ")"
//   poly     := ["+"|"-"] term (("+"|"-") term)*
//   term     := coeff ["*"] factor ("*" factor)* | coeff | factor ("*" factor)*
//   coeff    := int ["/" int]
//   factor   := var ["^" int]
//   var      := ("x" | "t") int | letter
//   antichain:= "{" [monomial ("," monomial)*] "}"
//
// Indexed variables are 1-based. Bare letters map to variables in the order
// of VariableNames::letters (default x, y, z, w).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/graded_engine.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

struct VariableNames {
  /// 0 means: infer from the highest variable mentioned.
  std::size_t dim = 0;
  std::vector<std::string> letters = {"x", "y", "z", "w"};
};

struct ParsedIdeal {
  std::size_t dim;
  std::vector<Polynomial> generators;
  /// Every generator is a single term.
  bool monomial;

  MonomialIdeal as_monomial() const;
  HomogeneousIdeal as_homogeneous() const;
};

Polynomial parse_polynomial(std::string_view text, const VariableNames& names = {});
/// Also accepts the JSON form {"gens": [[3,0],[0,2]]}.
ParsedIdeal parse_ideal(std::string_view text, const VariableNames& names = {});
Antichain parse_antichain(std::string_view text, const VariableNames& names = {});
ExponentVector parse_exponent_list(std::string_view text);

std::string format_ideal(const MonomialIdeal& I, std::string_view prefix = "x");
std::string format_ideal(const HomogeneousIdeal& I, std::string_view prefix = "x");
std::string format_antichain(const Antichain& A, std::string_view prefix = "x");

}  // namespace apolar
