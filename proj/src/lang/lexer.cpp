#include "distalg/lang/lexer.hpp"

#include <cctype>

#include "distalg/errors.hpp"

namespace distalg::lang {

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, int at_col) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.line = line;
        t.column = at_col;
        out.push_back(std::move(t));
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        int start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            std::string num = src.substr(i, j - i);
            // a '/' directly followed by digits is part of the literal
            if (j < src.size() && src[j] == '/' && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                if (src.compare(j + 1, k - j - 1, std::string(k - j - 1, '0')) == 0)
                    throw parse_error(line, start_col, "zero denominator in rational literal");
                num += src.substr(j, k - j);
                j = k;
            }
            Token t;
            t.kind = Token::Kind::Number;
            t.number = parse_rational(num);
            t.text = num;
            t.line = line;
            t.column = start_col;
            out.push_back(std::move(t));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Token::Kind::Ident, src.substr(i, j - i), start_col);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            case ',': k = Token::Kind::Comma; break;
            default:
                throw parse_error(line, col, std::string("unexpected character '") + c + "'");
        }
        push(k, std::string(1, c), start_col);
        ++i;
        ++col;
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    out.push_back(std::move(end));
    return out;
}

} // namespace distalg::lang
