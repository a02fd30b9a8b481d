#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chargealg/errors.hpp"

namespace chargealg::detail {

enum class TokenKind { Identifier, Number, String, Symbol, End };

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_symbol(std::string_view t) const { return is(TokenKind::Symbol, t); }
};

/// Splits input into identifiers, unsigned numbers, double-quoted strings and
/// one-character punctuation. `#` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token &token);

class TokenCursor {
  public:
    explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token &peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token &next() {
        const Token &t = peek();
        if (pos_ < tokens_.size() - 1) {
            ++pos_;
        }
        return t;
    }
    bool accept_symbol(std::string_view s) {
        if (peek().is_symbol(s)) {
            next();
            return true;
        }
        return false;
    }
    const Token &expect_symbol(std::string_view s) {
        if (!peek().is_symbol(s)) {
            throw ParseError(peek().span, "expected '" + std::string(s) + "' but found " + describe(peek()));
        }
        return next();
    }
    const Token &expect(TokenKind kind, std::string_view what) {
        if (peek().kind != kind) {
            throw ParseError(peek().span, "expected " + std::string(what) + " but found " + describe(peek()));
        }
        return next();
    }
    bool at_keyword(std::string_view word) const { return peek().is(TokenKind::Identifier, word); }
    const Token &expect_keyword(std::string_view word) {
        if (!at_keyword(word)) {
            throw ParseError(peek().span, "expected '" + std::string(word) + "' but found " + describe(peek()));
        }
        return next();
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace chargealg::detail
