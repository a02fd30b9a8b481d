#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chargealg/symbols.hpp"

namespace chargealg {

using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::string to_string(const Rational &value);

struct Factor {
    SymbolId symbol;
    int exponent;

    bool operator==(const Factor &) const = default;
};

/// Product of symbols raised to nonzero integer powers, kept sorted by id.
class Monomial {
  public:
    Monomial() = default;
    static Monomial of(SymbolId symbol, int exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor> &factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(SymbolId symbol) const;
    int degree() const;

    Monomial operator*(const Monomial &other) const;
    Monomial pow(int n) const;
    Monomial with_exponent(SymbolId symbol, int exponent) const;

    bool operator==(const Monomial &) const = default;

  private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order, greatest first. Ties on total degree are
/// broken by the exponent of the lowest symbol id.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Canonical expression: a Laurent polynomial over the registered symbols
/// with exact rational coefficients, stored as a sorted term map with no
/// zero coefficients. Two expressions are equal as rational functions iff
/// they compare equal here.
class Expr {
  public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Expr() = default;
    Expr(long value);
    explicit Expr(const Rational &value);

    static Expr symbol(SymbolId id);
    static Expr term(const Rational &coefficient, const Monomial &monomial);
    static Expr from_terms(Terms terms);

    const Terms &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;
    /// The single term of a monomial expression, if it is one.
    std::optional<std::pair<Monomial, Rational>> as_term() const;

    std::vector<SymbolId> symbols() const;
    bool depends_on(SymbolId id) const;
    bool depends_on_kind(const SymbolTable &table, SymbolKind kind) const;

    Expr operator-() const;
    friend Expr operator+(const Expr &a, const Expr &b);
    friend Expr operator-(const Expr &a, const Expr &b);
    friend Expr operator*(const Expr &a, const Expr &b);
    /// Exact division; the divisor must be a single nonzero term.
    friend Expr operator/(const Expr &a, const Expr &b);
    /// Negative powers are only defined for single-term expressions.
    Expr pow(int n) const;

    bool operator==(const Expr &other) const;

  private:
    Terms terms_;
};

/// Mutable accumulator for building sums without quadratic copying.
class ExprAccumulator {
  public:
    void add(const Expr &e, const Rational &scale = Rational(1));
    void add_term(const Monomial &m, const Rational &c);
    Expr take();

  private:
    Expr::Terms terms_;
};

Expr sum(std::span<const Expr> items);

/// Partial derivative; every other registered symbol is held fixed.
Expr diff(const Expr &e, SymbolId symbol);
Expr diff(const Expr &e, std::string_view symbol, const SymbolTable &table);

/// Simultaneous substitution. The result is canonical.
Expr substitute(const Expr &e, const std::map<SymbolId, Expr> &bindings);

/// Floating-point evaluation. Throws UnboundSymbolError / DivisionByZeroError.
double eval_numeric(const Expr &e, const std::unordered_map<SymbolId, double> &point);
double eval_numeric(const Expr &e, const std::map<std::string, double> &point, const SymbolTable &table);

struct DegreeReport {
    bool polynomial = true;
    /// Highest exponent per requested symbol, in request order.
    std::vector<std::pair<SymbolId, int>> max_degree;
    int total_degree = 0;

    int degree(SymbolId id) const;
};

/// Maximum degree of `e` in each listed symbol; `polynomial` is false if any
/// listed symbol carries a negative exponent.
DegreeReport is_polynomial_in(const Expr &e, std::span<const SymbolId> symbols);

/// Splits `e` by its monomial in `symbols`: e = sum_k key_k * value_k, with
/// each value free of `symbols`.
std::map<Monomial, Expr, MonomialOrder> collect(const Expr &e, std::span<const SymbolId> symbols);

/// Infix rendering that parses back to the same expression.
std::string render(const Expr &e, const SymbolTable &table);

/// Expression compiled for repeated floating-point evaluation against a
/// dense value vector indexed by SymbolId.
class CompiledExpr {
  public:
    CompiledExpr() = default;
    explicit CompiledExpr(const Expr &e);

    double operator()(std::span<const double> values) const;
    bool is_zero() const { return terms_.empty(); }

  private:
    struct Term {
        double coefficient;
        std::vector<Factor> factors;
    };
    std::vector<Term> terms_;
};

using ExprMatrix = std::vector<std::vector<Expr>>;

Expr determinant(const ExprMatrix &m);

} // namespace chargealg
