#include "chargealg/sysdsl.hpp"

#include <algorithm>
#include <set>

#include "chargealg/errors.hpp"
#include "chargealg/syntax.hpp"
#include "expr_parser.hpp"
#include "lexer.hpp"

namespace chargealg {

namespace {

std::string plural(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::Velocity:
        return "velocities";
    case SymbolKind::Momentum:
        return "momenta";
    case SymbolKind::Time:
        return "time";
    default:
        return std::string(to_string(kind)) + "s";
    }
}

using detail::Token;
using detail::TokenCursor;
using detail::TokenKind;

const std::set<std::string, std::less<>> kKeywords = {"system", "params",  "coords",  "lagrangian",
                                                      "generator", "delta", "delta_t", "lambda"};

struct NamedSpan {
    std::string name;
    SourceSpan span;
};

class SystemParser {
  public:
    explicit SystemParser(std::string_view text) : cursor_(detail::tokenize(text)) {}

    SystemSpec parse() {
        SystemSpec spec;
        cursor_.expect_keyword("system");
        spec.name = cursor_.expect(TokenKind::String, "a quoted system name").text;

        std::vector<ParameterDecl> params;
        std::vector<NamedSpan> declared;
        if (cursor_.at_keyword("params")) {
            cursor_.next();
            cursor_.expect_symbol("{");
            if (!cursor_.peek().is_symbol("}")) {
                do {
                    const Token &tok = identifier("a parameter name");
                    ParameterDecl decl{tok.text, false};
                    if (cursor_.accept_symbol(">")) {
                        const Token &zero = cursor_.expect(TokenKind::Number, "0");
                        if (zero.text != "0") {
                            throw ParseError(zero.span, "only '> 0' positivity assumptions are supported");
                        }
                        decl.positive = true;
                    }
                    params.push_back(decl);
                    declared.push_back({tok.text, tok.span});
                } while (cursor_.accept_symbol(","));
            }
            cursor_.expect_symbol("}");
        }

        cursor_.expect_keyword("coords");
        cursor_.expect_symbol("{");
        std::vector<std::string> coords;
        do {
            const Token &tok = identifier("a coordinate name");
            coords.push_back(tok.text);
            declared.push_back({tok.text, tok.span});
        } while (cursor_.accept_symbol(","));
        cursor_.expect_symbol("}");

        spec.symbols = build_table(coords, params, declared);
        table_ = &spec.symbols;

        cursor_.expect_keyword("lagrangian");
        cursor_.expect_symbol("=");
        spec.lagrangian = expression().first;

        std::set<std::string> names;
        while (cursor_.at_keyword("generator")) {
            cursor_.next();
            const Token &name = cursor_.expect(TokenKind::String, "a quoted generator name");
            if (!names.insert(name.text).second) {
                throw ParseError(name.span, "duplicate generator name \"" + name.text + "\"");
            }
            spec.generators.push_back(generator(name.text));
        }
        if (cursor_.peek().kind != TokenKind::End) {
            throw ParseError(cursor_.peek().span, "expected 'generator' but found " + detail::describe(cursor_.peek()));
        }
        if (spec.generators.empty()) {
            throw ParseError(cursor_.peek().span, "at least one generator is required");
        }
        return spec;
    }

  private:
    const Token &identifier(std::string_view what) {
        const Token &tok = cursor_.expect(TokenKind::Identifier, what);
        if (kKeywords.contains(tok.text)) {
            throw ParseError(tok.span, "'" + tok.text + "' is a reserved word");
        }
        return tok;
    }

    static SymbolTable build_table(const std::vector<std::string> &coords, const std::vector<ParameterDecl> &params,
                                   const std::vector<NamedSpan> &declared) {
        try {
            return SymbolTable(coords, params);
        } catch (const DuplicateSymbolError &e) {
            // Point at the declaration that produced the clashing name, the
            // last one if the name was written twice.
            SourceSpan where = declared.empty() ? SourceSpan{} : declared.back().span;
            for (auto it = declared.rbegin(); it != declared.rend(); ++it) {
                if (it->name == e.name() || SymbolTable::velocity_name(it->name) == e.name() ||
                    SymbolTable::momentum_name(it->name) == e.name()) {
                    where = it->span;
                    break;
                }
            }
            throw ParseError(where, e.what());
        }
    }

    void check_symbols(const ExprTree &tree) const {
        if (tree.kind() == ExprTree::Kind::Symbol) {
            const auto id = table_->find(tree.name());
            if (!id) {
                throw ParseError(tree.span(), "unknown symbol '" + tree.name() + "'");
            }
            if (table_->kind(*id) == SymbolKind::Momentum) {
                throw ParseError(tree.span(), "momentum symbol '" + tree.name() + "' may not appear in input");
            }
        }
        for (const auto &child : tree.children()) {
            check_symbols(child);
        }
    }

    std::pair<Expr, SourceSpan> expression() {
        const SourceSpan span = cursor_.peek().span;
        ExprTree tree = detail::parse_expr_tokens(cursor_);
        check_symbols(tree);
        try {
            return {normalize(tree, *table_), span};
        } catch (const RejectionError &e) {
            throw ParseError(span, e.what());
        } catch (const DivisionByZeroError &e) {
            throw ParseError(span, e.what());
        }
    }

    void forbid(const Expr &e, SourceSpan span, SymbolKind kind, const std::string &what) const {
        if (e.depends_on_kind(*table_, kind)) {
            throw ParseError(span, what + " must not reference " + plural(kind));
        }
    }

    GeneratorDecl generator(const std::string &name) {
        GeneratorDecl gen;
        gen.name = name;
        gen.delta_q.assign(table_->dof(), Expr());
        cursor_.expect_symbol("{");
        cursor_.expect_keyword("delta");
        cursor_.expect_symbol("{");
        std::set<SymbolId> seen;
        while (!cursor_.peek().is_symbol("}")) {
            const Token &tok = cursor_.expect(TokenKind::Identifier, "a coordinate name");
            const auto id = table_->find(tok.text);
            if (!id || table_->kind(*id) != SymbolKind::Coordinate) {
                throw ParseError(tok.span, "'" + tok.text + "' is not a coordinate; the system has " +
                                               std::to_string(table_->dof()) + " coordinate(s)");
            }
            if (!seen.insert(*id).second) {
                throw ParseError(tok.span, "duplicate delta entry for '" + tok.text + "'");
            }
            cursor_.expect_symbol("=");
            auto [e, span] = expression();
            forbid(e, span, SymbolKind::Velocity, "delta of '" + tok.text + "'");
            const auto &coords = table_->coordinates();
            const auto index = std::find(coords.begin(), coords.end(), *id) - coords.begin();
            gen.delta_q[static_cast<std::size_t>(index)] = e;
            if (!cursor_.accept_symbol(",")) {
                cursor_.accept_symbol(";");
            }
        }
        cursor_.expect_symbol("}");

        bool have_dt = false;
        while (!cursor_.peek().is_symbol("}")) {
            if (cursor_.at_keyword("delta_t") && !have_dt) {
                cursor_.next();
                cursor_.expect_symbol("=");
                auto [e, span] = expression();
                forbid(e, span, SymbolKind::Coordinate, "delta_t");
                forbid(e, span, SymbolKind::Velocity, "delta_t");
                gen.delta_t = e;
                have_dt = true;
            } else if (cursor_.at_keyword("lambda") && !gen.lambda) {
                cursor_.next();
                cursor_.expect_symbol("=");
                auto [e, span] = expression();
                forbid(e, span, SymbolKind::Velocity, "lambda");
                gen.lambda = e;
            } else {
                throw ParseError(cursor_.peek().span,
                                 "expected 'delta_t', 'lambda' or '}' but found " + detail::describe(cursor_.peek()));
            }
        }
        cursor_.expect_symbol("}");
        return gen;
    }

    TokenCursor cursor_;
    const SymbolTable *table_ = nullptr;
};

} // namespace

SystemSpec parse_system(std::string_view text) { return SystemParser(text).parse(); }

std::string render_system(const SystemSpec &spec) {
    const auto &table = spec.symbols;
    std::string out = "system \"" + spec.name + "\"\n";
    out += "params {";
    const auto params = table.parameter_decls();
    for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? ", " : " ") + params[i].name + (params[i].positive ? " > 0" : "");
    }
    out += params.empty() ? "}\n" : " }\n";
    out += "coords {";
    const auto coords = table.coordinate_names();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out += (i ? ", " : " ") + coords[i];
    }
    out += " }\n";
    out += "lagrangian = " + render(spec.lagrangian, table) + "\n";
    for (const auto &gen : spec.generators) {
        out += "\ngenerator \"" + gen.name + "\" {\n  delta {";
        bool any = false;
        for (std::size_t j = 0; j < gen.delta_q.size(); ++j) {
            if (!gen.delta_q[j].is_zero()) {
                out += (any ? ", " : " ") + coords[j] + " = " + render(gen.delta_q[j], table);
                any = true;
            }
        }
        out += any ? " }\n" : "}\n";
        if (!gen.delta_t.is_zero()) {
            out += "  delta_t = " + render(gen.delta_t, table) + "\n";
        }
        if (gen.lambda) {
            out += "  lambda = " + render(*gen.lambda, table) + "\n";
        }
        out += "}\n";
    }
    return out;
}

void validate(const SystemSpec &spec) {
    const auto &table = spec.symbols;
    if (table.dof() == 0) {
        throw RejectionError("a system needs at least one coordinate");
    }
    if (spec.generators.empty()) {
        throw RejectionError("a system needs at least one generator");
    }
    auto forbid = [&](const Expr &e, SymbolKind kind, const std::string &what) {
        if (e.depends_on_kind(table, kind)) {
            throw RejectionError(what + " must not reference " + plural(kind));
        }
    };
    forbid(spec.lagrangian, SymbolKind::Momentum, "the lagrangian");
    std::set<std::string> names;
    for (const auto &gen : spec.generators) {
        if (!names.insert(gen.name).second) {
            throw RejectionError("duplicate generator name \"" + gen.name + "\"");
        }
        if (gen.delta_q.size() != table.dof()) {
            throw RejectionError("generator \"" + gen.name + "\" has " + std::to_string(gen.delta_q.size()) +
                                 " delta entries for " + std::to_string(table.dof()) + " coordinates");
        }
        for (const auto &d : gen.delta_q) {
            forbid(d, SymbolKind::Velocity, "delta_q");
            forbid(d, SymbolKind::Momentum, "delta_q");
        }
        forbid(gen.delta_t, SymbolKind::Coordinate, "delta_t");
        forbid(gen.delta_t, SymbolKind::Velocity, "delta_t");
        forbid(gen.delta_t, SymbolKind::Momentum, "delta_t");
        if (gen.lambda) {
            forbid(*gen.lambda, SymbolKind::Velocity, "lambda");
            forbid(*gen.lambda, SymbolKind::Momentum, "lambda");
        }
    }
}

} // namespace chargealg
