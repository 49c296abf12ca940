#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "resmith/field.hpp"
#include "resmith/poly.hpp"

namespace resmith {

struct ExprAst {
  enum class Kind { Literal, Variable, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Literal;
  mpq_class literal;
  char variable = 0;
  unsigned exponent = 0;
  std::size_t position = 0;
  std::vector<std::unique_ptr<ExprAst>> children;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := '(' expr ')' | var | digits ('/' digits)? | '-' factor
/// Whitespace is ignored between tokens. Errors carry a 1-based byte offset.
std::unique_ptr<ExprAst> parse_expr(std::string_view text, char var_x = 'x', char var_y = 'y');

/// Expands an AST into the given field.
BiPoly expand(const ExprAst& ast, const Field& field, char var_x = 'x', char var_y = 'y');

BiPoly parse_poly(std::string_view text, const Field& field);

}  // namespace resmith
