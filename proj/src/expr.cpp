#include "chargealg/expr.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "chargealg/errors.hpp"

namespace chargealg {

Rational make_rational(long numerator, long denominator) {
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &value) { return value.get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(SymbolId symbol, int exponent) {
    Monomial m;
    if (exponent != 0) {
        m.factors_.push_back({symbol, exponent});
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor &a, const Factor &b) { return a.symbol < b.symbol; });
    Monomial m;
    for (const auto &f : factors) {
        if (!m.factors_.empty() && m.factors_.back().symbol == f.symbol) {
            m.factors_.back().exponent += f.exponent;
            if (m.factors_.back().exponent == 0) {
                m.factors_.pop_back();
            }
        } else if (f.exponent != 0) {
            m.factors_.push_back(f);
        }
    }
    return m;
}

int Monomial::exponent(SymbolId symbol) const {
    for (const auto &f : factors_) {
        if (f.symbol == symbol) {
            return f.exponent;
        }
    }
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto &f : factors_) {
        d += f.exponent;
    }
    return d;
}

Monomial Monomial::operator*(const Monomial &other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->symbol < b->symbol)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->symbol < a->symbol) {
            out.factors_.push_back(*b++);
        } else {
            const int e = a->exponent + b->exponent;
            if (e != 0) {
                out.factors_.push_back({a->symbol, e});
            }
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::pow(int n) const {
    if (n == 0) {
        return {};
    }
    Monomial out = *this;
    for (auto &f : out.factors_) {
        f.exponent *= n;
    }
    return out;
}

Monomial Monomial::with_exponent(SymbolId symbol, int exponent) const {
    std::vector<Factor> factors;
    for (const auto &f : factors_) {
        if (f.symbol != symbol) {
            factors.push_back(f);
        }
    }
    factors.push_back({symbol, exponent});
    return from_factors(std::move(factors));
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) {
        return da > db;
    }
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].symbol == fb[j].symbol) {
            if (fa[i].exponent != fb[j].exponent) {
                return fa[i].exponent > fb[j].exponent;
            }
            ++i;
            ++j;
        } else if (fa[i].symbol < fb[j].symbol) {
            return fa[i].exponent > 0;
        } else {
            return fb[j].exponent < 0;
        }
    }
    if (i < fa.size()) {
        return fa[i].exponent > 0;
    }
    if (j < fb.size()) {
        return fb[j].exponent < 0;
    }
    return false;
}

// -------------------------------------------------------------------- Expr

namespace {

void accumulate(Expr::Terms &terms, const Monomial &m, const Rational &c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

} // namespace

Expr::Expr(long value) {
    if (value != 0) {
        terms_.emplace(Monomial{}, Rational(value));
    }
}

Expr::Expr(const Rational &value) {
    if (value != 0) {
        terms_.emplace(Monomial{}, value);
    }
}

Expr Expr::symbol(SymbolId id) { return term(Rational(1), Monomial::of(id)); }

Expr Expr::term(const Rational &coefficient, const Monomial &monomial) {
    Expr e;
    if (coefficient != 0) {
        e.terms_.emplace(monomial, coefficient);
    }
    return e;
}

Expr Expr::from_terms(Terms terms) {
    Expr e;
    for (auto &[m, c] : terms) {
        if (c != 0) {
            e.terms_.emplace(m, c);
        }
    }
    return e;
}

bool Expr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> Expr::constant_value() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (is_constant()) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

std::optional<std::pair<Monomial, Rational>> Expr::as_term() const {
    if (terms_.size() != 1) {
        return std::nullopt;
    }
    return *terms_.begin();
}

std::vector<SymbolId> Expr::symbols() const {
    std::set<SymbolId> ids;
    for (const auto &[m, c] : terms_) {
        for (const auto &f : m.factors()) {
            ids.insert(f.symbol);
        }
    }
    return {ids.begin(), ids.end()};
}

bool Expr::depends_on(SymbolId id) const {
    for (const auto &[m, c] : terms_) {
        if (m.exponent(id) != 0) {
            return true;
        }
    }
    return false;
}

bool Expr::depends_on_kind(const SymbolTable &table, SymbolKind kind) const {
    for (auto id : symbols()) {
        if (table.kind(id) == kind) {
            return true;
        }
    }
    return false;
}

Expr Expr::operator-() const {
    Expr out = *this;
    for (auto &[m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Expr operator+(const Expr &a, const Expr &b) {
    Expr out = a;
    for (const auto &[m, c] : b.terms_) {
        accumulate(out.terms_, m, c);
    }
    return out;
}

Expr operator-(const Expr &a, const Expr &b) {
    Expr out = a;
    for (const auto &[m, c] : b.terms_) {
        accumulate(out.terms_, m, -c);
    }
    return out;
}

Expr operator*(const Expr &a, const Expr &b) {
    Expr out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            accumulate(out.terms_, ma * mb, ca * cb);
        }
    }
    return out;
}

Expr operator/(const Expr &a, const Expr &b) {
    if (b.is_zero()) {
        throw DivisionByZeroError("division by the zero expression");
    }
    return a * b.pow(-1);
}

Expr Expr::pow(int n) const {
    if (n == 0) {
        return Expr(1);
    }
    if (n < 0) {
        auto t = as_term();
        if (!t) {
            if (is_zero()) {
                throw DivisionByZeroError("negative power of the zero expression");
            }
            throw NonPolynomialError("negative power of a sum is outside the polynomial class");
        }
        Rational inv = 1 / t->second;
        mpz_class num = 1, den = 1;
        mpz_pow_ui(num.get_mpz_t(), inv.get_num_mpz_t(), static_cast<unsigned long>(-n));
        mpz_pow_ui(den.get_mpz_t(), inv.get_den_mpz_t(), static_cast<unsigned long>(-n));
        Rational c(num, den);
        c.canonicalize();
        return term(c, t->first.pow(n));
    }
    Expr result(1);
    Expr base = *this;
    unsigned k = static_cast<unsigned>(n);
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

bool Expr::operator==(const Expr &other) const {
    if (terms_.size() != other.terms_.size()) {
        return false;
    }
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (!(a->first == b->first) || a->second != b->second) {
            return false;
        }
    }
    return true;
}

void ExprAccumulator::add(const Expr &e, const Rational &scale) {
    for (const auto &[m, c] : e.terms()) {
        accumulate(terms_, m, c * scale);
    }
}

void ExprAccumulator::add_term(const Monomial &m, const Rational &c) { accumulate(terms_, m, c); }

Expr ExprAccumulator::take() {
    Expr e = Expr::from_terms(std::move(terms_));
    terms_.clear();
    return e;
}

Expr sum(std::span<const Expr> items) {
    ExprAccumulator acc;
    for (const auto &e : items) {
        acc.add(e);
    }
    return acc.take();
}

// ---------------------------------------------------------- calculus et al.

Expr diff(const Expr &e, SymbolId symbol) {
    ExprAccumulator acc;
    for (const auto &[m, c] : e.terms()) {
        const int k = m.exponent(symbol);
        if (k != 0) {
            acc.add_term(m.with_exponent(symbol, k - 1), c * k);
        }
    }
    return acc.take();
}

Expr diff(const Expr &e, std::string_view symbol, const SymbolTable &table) {
    return diff(e, table.id(symbol));
}

Expr substitute(const Expr &e, const std::map<SymbolId, Expr> &bindings) {
    if (bindings.empty()) {
        return e;
    }
    ExprAccumulator acc;
    for (const auto &[m, c] : e.terms()) {
        std::vector<Factor> kept;
        Expr product(c);
        for (const auto &f : m.factors()) {
            if (auto it = bindings.find(f.symbol); it != bindings.end()) {
                product = product * it->second.pow(f.exponent);
            } else {
                kept.push_back(f);
            }
        }
        acc.add(product * Expr::term(Rational(1), Monomial::from_factors(std::move(kept))));
    }
    return acc.take();
}

namespace {

double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) {
        r *= base;
    }
    return r;
}

double eval_factor(double value, int exponent, SymbolId id) {
    if (exponent > 0) {
        return ipow(value, exponent);
    }
    if (value == 0.0) {
        throw DivisionByZeroError("denominator vanishes: #" + std::to_string(id) + " = 0");
    }
    return 1.0 / ipow(value, -exponent);
}

} // namespace

double eval_numeric(const Expr &e, const std::unordered_map<SymbolId, double> &point) {
    double total = 0.0;
    for (const auto &[m, c] : e.terms()) {
        double term = c.get_d();
        for (const auto &f : m.factors()) {
            auto it = point.find(f.symbol);
            if (it == point.end()) {
                throw UnboundSymbolError("#" + std::to_string(f.symbol));
            }
            term *= eval_factor(it->second, f.exponent, f.symbol);
        }
        total += term;
    }
    return total;
}

double eval_numeric(const Expr &e, const std::map<std::string, double> &point, const SymbolTable &table) {
    std::unordered_map<SymbolId, double> byid;
    for (auto id : e.symbols()) {
        const auto &name = table.name(id);
        auto it = point.find(name);
        if (it == point.end()) {
            throw UnboundSymbolError(name);
        }
        byid.emplace(id, it->second);
    }
    try {
        return eval_numeric(e, byid);
    } catch (const DivisionByZeroError &) {
        for (const auto &[id, v] : byid) {
            if (v == 0.0) {
                throw DivisionByZeroError("denominator vanishes: " + table.name(id) + " = 0");
            }
        }
        throw;
    }
}

int DegreeReport::degree(SymbolId id) const {
    for (const auto &[s, d] : max_degree) {
        if (s == id) {
            return d;
        }
    }
    return 0;
}

DegreeReport is_polynomial_in(const Expr &e, std::span<const SymbolId> symbols) {
    DegreeReport report;
    for (auto s : symbols) {
        report.max_degree.emplace_back(s, 0);
    }
    for (const auto &[m, c] : e.terms()) {
        int total = 0;
        for (auto &[s, d] : report.max_degree) {
            const int k = m.exponent(s);
            if (k < 0) {
                report.polynomial = false;
            }
            d = std::max(d, k);
            total += k;
        }
        report.total_degree = std::max(report.total_degree, total);
    }
    return report;
}

std::map<Monomial, Expr, MonomialOrder> collect(const Expr &e, std::span<const SymbolId> symbols) {
    std::map<Monomial, ExprAccumulator, MonomialOrder> parts;
    for (const auto &[m, c] : e.terms()) {
        std::vector<Factor> key;
        std::vector<Factor> rest;
        for (const auto &f : m.factors()) {
            const bool selected = std::find(symbols.begin(), symbols.end(), f.symbol) != symbols.end();
            (selected ? key : rest).push_back(f);
        }
        parts[Monomial::from_factors(std::move(key))].add_term(Monomial::from_factors(std::move(rest)), c);
    }
    std::map<Monomial, Expr, MonomialOrder> out;
    for (auto &[k, acc] : parts) {
        out.emplace(k, acc.take());
    }
    return out;
}

// --------------------------------------------------------------- rendering

namespace {

std::string render_power(const std::string &name, int exponent) {
    return exponent == 1 ? name : name + "^" + std::to_string(exponent);
}

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += items[i];
    }
    return out;
}

} // namespace

std::string render(const Expr &e, const SymbolTable &table) {
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : e.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        std::vector<std::string> num;
        std::vector<std::string> den;
        bool has_positive = false;
        for (const auto &f : m.factors()) {
            if (f.exponent > 0) {
                has_positive = true;
            }
        }
        if (magnitude.get_num() != 1 || !has_positive) {
            num.push_back(magnitude.get_num().get_str());
        }
        if (magnitude.get_den() != 1) {
            den.push_back(magnitude.get_den().get_str());
        }
        for (const auto &f : m.factors()) {
            if (f.exponent > 0) {
                num.push_back(render_power(table.name(f.symbol), f.exponent));
            } else {
                den.push_back(render_power(table.name(f.symbol), -f.exponent));
            }
        }
        std::string body = join(num, "*");
        if (den.size() == 1) {
            body += "/" + den.front();
        } else if (den.size() > 1) {
            body += "/(" + join(den, "*") + ")";
        }
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- compiled

CompiledExpr::CompiledExpr(const Expr &e) {
    for (const auto &[m, c] : e.terms()) {
        terms_.push_back({c.get_d(), m.factors()});
    }
}

double CompiledExpr::operator()(std::span<const double> values) const {
    double total = 0.0;
    for (const auto &t : terms_) {
        double v = t.coefficient;
        for (const auto &f : t.factors) {
            v *= eval_factor(values[f.symbol], f.exponent, f.symbol);
        }
        total += v;
    }
    return total;
}

// ------------------------------------------------------------ determinant

Expr determinant(const ExprMatrix &m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return Expr(1);
    }
    if (n == 1) {
        return m[0][0];
    }
    if (n == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    }
    ExprAccumulator acc;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) {
            continue;
        }
        ExprMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Expr> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) {
                    row.push_back(m[i][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        acc.add(m[0][col] * determinant(minor), Rational(col % 2 == 0 ? 1 : -1));
    }
    return acc.take();
}

} // namespace chargealg
