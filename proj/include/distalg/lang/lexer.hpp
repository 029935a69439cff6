#pragma once

#include <string>
#include <vector>

#include "distalg/rational.hpp"

namespace distalg::lang {

struct Token {
    enum class Kind {
        Number, // unsigned rational literal, e.g. 2 or 1/2
        Ident,  // [A-Za-z_][A-Za-z0-9_]*
        Plus, Minus, Star, Caret, LParen, RParen, Comma,
        End,
    };
    Kind kind;
    Rational number;
    std::string text;
    int line = 1;
    int column = 1;
};

/// Tokenizes a single expression. Throws parse_error on stray characters.
std::vector<Token> lex(const std::string& src);

} // namespace distalg::lang
