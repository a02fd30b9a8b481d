#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chargealg/errors.hpp"
#include "chargealg/expr.hpp"

namespace chargealg {

/// Surface syntax tree as written by a user. Immutable and cheap to copy.
/// Division is represented as a product with a power of -1 and subtraction
/// as a sum with a negation, so only six node kinds exist.
class ExprTree {
  public:
    enum class Kind { Constant, Symbol, Sum, Product, Power, Negation };

    static ExprTree constant(Rational value, SourceSpan span = {});
    static ExprTree symbol(std::string name, SourceSpan span = {});
    static ExprTree sum(std::vector<ExprTree> terms, SourceSpan span = {});
    static ExprTree product(std::vector<ExprTree> factors, SourceSpan span = {});
    static ExprTree power(ExprTree base, int exponent, SourceSpan span = {});
    static ExprTree negation(ExprTree operand, SourceSpan span = {});

    Kind kind() const;
    const Rational &value() const;
    const std::string &name() const;
    int exponent() const;
    std::span<const ExprTree> children() const;
    SourceSpan span() const;

  private:
    struct Node;
    explicit ExprTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Canonical form of a syntax tree. Throws UnknownSymbolError for names that
/// are not registered, NonPolynomialError for divisions by sums.
Expr normalize(const ExprTree &tree, const SymbolTable &table);

/// Canonical expression as a syntax tree (sum of products of powers).
ExprTree to_tree(const Expr &e, const SymbolTable &table);

/// Parses one infix expression: + - * / ^ (integer exponents), parentheses,
/// integer and decimal literals. Throws ParseError.
ExprTree parse_expression(std::string_view text);

/// parse_expression followed by normalize.
Expr parse_expr(std::string_view text, const SymbolTable &table);

} // namespace chargealg
