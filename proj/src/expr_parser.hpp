#pragma once

#include "chargealg/syntax.hpp"
#include "lexer.hpp"

namespace chargealg::detail {

// expr     := term (("+" | "-") term)*
// term     := unary (("*" | "/") unary)*
// unary    := ("-" | "+") unary | power
// power    := primary ["^" exponent]
// exponent := ["-" | "+"] INTEGER | "(" ["-" | "+"] INTEGER ")"
// primary  := NUMBER | IDENT | "(" expr ")"
ExprTree parse_expr_tokens(TokenCursor &cursor);

} // namespace chargealg::detail
