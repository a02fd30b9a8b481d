#include "lexer.hpp"

#include <cctype>

namespace chargealg::detail {

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        const SourceSpan span{line, col};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            out.push_back({TokenKind::Identifier, std::string(text.substr(i, j - i)), span});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j < text.size() && text[j] == '.') {
                ++j;
                if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) {
                    throw ParseError(span, "malformed number literal");
                }
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
            }
            out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), span});
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n') {
                ++j;
            }
            if (j >= text.size() || text[j] != '"') {
                throw ParseError(span, "unterminated string");
            }
            out.push_back({TokenKind::String, std::string(text.substr(i + 1, j - i - 1)), span});
            advance(j + 1 - i);
        } else if (std::string_view("+-*/^(){},=>;").find(c) != std::string_view::npos) {
            out.push_back({TokenKind::Symbol, std::string(1, c), span});
            advance(1);
        } else {
            throw ParseError(span, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({TokenKind::End, "", SourceSpan{line, col}});
    return out;
}

std::string describe(const Token &token) {
    switch (token.kind) {
    case TokenKind::End:
        return "end of input";
    case TokenKind::String:
        return "string \"" + token.text + "\"";
    case TokenKind::Number:
        return "number " + token.text;
    default:
        return "'" + token.text + "'";
    }
}

} // namespace chargealg::detail
