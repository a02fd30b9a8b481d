#include "chargealg/syntax.hpp"

#include <climits>

#include "expr_parser.hpp"

namespace chargealg {

struct ExprTree::Node {
    Kind kind;
    Rational value;
    std::string name;
    int exponent = 0;
    std::vector<ExprTree> children;
    SourceSpan span;
};

ExprTree ExprTree::constant(Rational value, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Constant, std::move(value), {}, 0, {}, span}));
}

ExprTree ExprTree::symbol(std::string name, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Symbol, {}, std::move(name), 0, {}, span}));
}

ExprTree ExprTree::sum(std::vector<ExprTree> terms, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Sum, {}, {}, 0, std::move(terms), span}));
}

ExprTree ExprTree::product(std::vector<ExprTree> factors, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Product, {}, {}, 0, std::move(factors), span}));
}

ExprTree ExprTree::power(ExprTree base, int exponent, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Power, {}, {}, exponent, {std::move(base)}, span}));
}

ExprTree ExprTree::negation(ExprTree operand, SourceSpan span) {
    return ExprTree(std::make_shared<const Node>(Node{Kind::Negation, {}, {}, 0, {std::move(operand)}, span}));
}

ExprTree::Kind ExprTree::kind() const { return node_->kind; }
const Rational &ExprTree::value() const { return node_->value; }
const std::string &ExprTree::name() const { return node_->name; }
int ExprTree::exponent() const { return node_->exponent; }
std::span<const ExprTree> ExprTree::children() const { return node_->children; }
SourceSpan ExprTree::span() const { return node_->span; }

Expr normalize(const ExprTree &tree, const SymbolTable &table) {
    switch (tree.kind()) {
    case ExprTree::Kind::Constant:
        return Expr(tree.value());
    case ExprTree::Kind::Symbol:
        return Expr::symbol(table.id(tree.name()));
    case ExprTree::Kind::Sum: {
        ExprAccumulator acc;
        for (const auto &child : tree.children()) {
            acc.add(normalize(child, table));
        }
        return acc.take();
    }
    case ExprTree::Kind::Product: {
        Expr out(1);
        for (const auto &child : tree.children()) {
            out = out * normalize(child, table);
        }
        return out;
    }
    case ExprTree::Kind::Power:
        return normalize(tree.children()[0], table).pow(tree.exponent());
    case ExprTree::Kind::Negation:
        return -normalize(tree.children()[0], table);
    }
    return {};
}

ExprTree to_tree(const Expr &e, const SymbolTable &table) {
    std::vector<ExprTree> terms;
    for (const auto &[m, c] : e.terms()) {
        std::vector<ExprTree> factors;
        factors.push_back(ExprTree::constant(c));
        for (const auto &f : m.factors()) {
            auto sym = ExprTree::symbol(table.name(f.symbol));
            factors.push_back(f.exponent == 1 ? sym : ExprTree::power(sym, f.exponent));
        }
        terms.push_back(ExprTree::product(std::move(factors)));
    }
    return ExprTree::sum(std::move(terms));
}

namespace detail {

namespace {

Rational parse_number(const Token &tok) {
    const auto dot = tok.text.find('.');
    if (dot == std::string::npos) {
        return Rational(mpz_class(tok.text, 10));
    }
    const std::string whole = tok.text.substr(0, dot);
    const std::string frac = tok.text.substr(dot + 1);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        den *= 10;
    }
    Rational r(mpz_class(whole + frac, 10), den);
    r.canonicalize();
    return r;
}

int parse_exponent(TokenCursor &cursor) {
    const bool parenthesized = cursor.accept_symbol("(");
    int sign = 1;
    if (cursor.accept_symbol("-")) {
        sign = -1;
    } else {
        cursor.accept_symbol("+");
    }
    const Token &tok = cursor.peek();
    if (tok.kind != TokenKind::Number || tok.text.find('.') != std::string::npos) {
        throw ParseError(tok.span, "exponent must be an integer literal, found " + describe(tok));
    }
    cursor.next();
    const mpz_class value(tok.text);
    if (value > 1000) {
        throw ParseError(tok.span, "exponent " + tok.text + " is too large");
    }
    if (parenthesized) {
        cursor.expect_symbol(")");
    }
    return sign * static_cast<int>(value.get_si());
}

ExprTree parse_unary(TokenCursor &cursor);

ExprTree parse_primary(TokenCursor &cursor) {
    const Token &tok = cursor.peek();
    if (tok.kind == TokenKind::Number) {
        cursor.next();
        return ExprTree::constant(parse_number(tok), tok.span);
    }
    if (tok.kind == TokenKind::Identifier) {
        cursor.next();
        return ExprTree::symbol(tok.text, tok.span);
    }
    if (tok.is_symbol("(")) {
        cursor.next();
        ExprTree inner = parse_expr_tokens(cursor);
        cursor.expect_symbol(")");
        return inner;
    }
    throw ParseError(tok.span, "expected an expression but found " + describe(tok));
}

ExprTree parse_power(TokenCursor &cursor) {
    const SourceSpan span = cursor.peek().span;
    ExprTree base = parse_primary(cursor);
    if (cursor.accept_symbol("^")) {
        const int k = parse_exponent(cursor);
        if (cursor.peek().is_symbol("^")) {
            throw ParseError(cursor.peek().span, "chained exponents need parentheses");
        }
        return ExprTree::power(std::move(base), k, span);
    }
    return base;
}

ExprTree parse_unary(TokenCursor &cursor) {
    const SourceSpan span = cursor.peek().span;
    if (cursor.accept_symbol("-")) {
        return ExprTree::negation(parse_unary(cursor), span);
    }
    if (cursor.accept_symbol("+")) {
        return parse_unary(cursor);
    }
    return parse_power(cursor);
}

ExprTree parse_term(TokenCursor &cursor) {
    const SourceSpan span = cursor.peek().span;
    std::vector<ExprTree> factors;
    factors.push_back(parse_unary(cursor));
    while (true) {
        if (cursor.accept_symbol("*")) {
            factors.push_back(parse_unary(cursor));
        } else if (cursor.peek().is_symbol("/")) {
            const SourceSpan at = cursor.next().span;
            factors.push_back(ExprTree::power(parse_unary(cursor), -1, at));
        } else {
            break;
        }
    }
    return factors.size() == 1 ? factors.front() : ExprTree::product(std::move(factors), span);
}

} // namespace

ExprTree parse_expr_tokens(TokenCursor &cursor) {
    const SourceSpan span = cursor.peek().span;
    std::vector<ExprTree> terms;
    terms.push_back(parse_term(cursor));
    while (true) {
        if (cursor.accept_symbol("+")) {
            terms.push_back(parse_term(cursor));
        } else if (cursor.peek().is_symbol("-")) {
            const SourceSpan at = cursor.next().span;
            terms.push_back(ExprTree::negation(parse_term(cursor), at));
        } else {
            break;
        }
    }
    return terms.size() == 1 ? terms.front() : ExprTree::sum(std::move(terms), span);
}

} // namespace detail

ExprTree parse_expression(std::string_view text) {
    detail::TokenCursor cursor(detail::tokenize(text));
    ExprTree tree = detail::parse_expr_tokens(cursor);
    if (cursor.peek().kind != detail::TokenKind::End) {
        throw ParseError(cursor.peek().span, "unexpected " + detail::describe(cursor.peek()) + " after expression");
    }
    return tree;
}

Expr parse_expr(std::string_view text, const SymbolTable &table) {
    return normalize(parse_expression(text), table);
}

} // namespace chargealg
