// ASCII concrete syntax.
//
//   contexts       <>   G |> A
//   substitutions  id  eps  p  f ; g  g+ : A  <t>  (g)
//   types          U  El(t)  Pi(A, B)  A[g]
//   terms          q  t[g]  lam(A, t)  app(t)  inU(i)  inEl(i, j)
//
// `;` is right associative; `+ : A` is a postfix on substitution atoms.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "alphanorm/syntax.hpp"

namespace alphanorm {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg);
  int line;
  int col;
};

std::string to_text(const Expr& e);

Ctx parse_ctx(std::string_view text);
Sub parse_sub(std::string_view text);
Ty parse_ty(std::string_view text);
Tm parse_tm(std::string_view text);
// Sort is inferred from the leading token.
Expr parse_expr(std::string_view text);

// Incremental parsing for embedding expressions in larger line formats:
// parses one expression of any sort starting at `offset` and advances it
// past the expression and trailing blanks.
Expr parse_expr_prefix(std::string_view text, std::size_t& offset);

}  // namespace alphanorm
