#pragma once

#include <map>
#include <string>
#include <vector>

#include "motconf/graded_poly.hpp"
#include "motconf/monomial.hpp"
#include "motconf/rational.hpp"
#include "motconf/symfunc.hpp"

namespace motconf {

// Multivariate polynomial with integer coefficients over a declared variable
// list; the defining data of an affine system. Variable indices in the
// monomials are 1-based positions in `vars`.
struct IntPolynomial {
  std::vector<std::string> vars;
  std::map<Monomial, Integer, GradedLexLess> terms;
  std::string source;
};

// Minimal infix grammar: integers, declared variable names, + - * ^ and
// parentheses. Throws std::invalid_argument with a position on bad input.
IntPolynomial parse_int_polynomial(const std::string& text,
                                   const std::vector<std::string>& vars);

// Character polynomial expressions: integers, X1, X2, ..., + - * ^,
// parentheses, and binom(Xi, n).
CharPolynomial parse_charpoly(const std::string& text);

// Label strings for generalized partitions: "a2b" = a^2 b, "ab" = a b.
// Each letter is a distinct label, an optional digit run its multiplicity.
GeneralizedPartition parse_tau(const std::string& text);

}  // namespace motconf
