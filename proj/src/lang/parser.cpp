#include "distalg/lang/parser.hpp"

#include <optional>

#include "distalg/errors.hpp"
#include "distalg/lang/lexer.hpp"
#include "distalg/poly.hpp"

namespace distalg::lang {

AstPtr make_ast(Ast node) { return std::make_shared<const Ast>(std::move(node)); }

bool ast_equal(const AstPtr& a, const AstPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind || a->rat != b->rat || a->order != b->order ||
        a->affine_c != b->affine_c || a->affine_d != b->affine_d || a->name != b->name)
        return false;
    return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
}

namespace {

/// Folds a subtree built from smooth atoms into a polynomial;
/// nullopt when a non-smooth construct appears.
std::optional<Poly> fold_smooth(const AstPtr& a) {
    switch (a->kind) {
        case Ast::Kind::RationalLit: return Poly(Scalar(a->rat));
        case Ast::Kind::SqrtTwoLit: return Poly(Scalar::sqrt2());
        case Ast::Kind::VarX: return Poly::x();
        case Ast::Kind::Neg: {
            auto p = fold_smooth(a->lhs);
            return p ? std::optional<Poly>(-*p) : std::nullopt;
        }
        case Ast::Kind::Add:
        case Ast::Kind::Sub:
        case Ast::Kind::Mul: {
            auto l = fold_smooth(a->lhs);
            auto r = fold_smooth(a->rhs);
            if (!l || !r) return std::nullopt;
            if (a->kind == Ast::Kind::Add) return *l + *r;
            if (a->kind == Ast::Kind::Sub) return *l - *r;
            return *l * *r;
        }
        case Ast::Kind::Pow: {
            auto p = fold_smooth(a->lhs);
            return p ? std::optional<Poly>(p->pow(a->order)) : std::nullopt;
        }
        default: return std::nullopt;
    }
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    AstPtr run() {
        AstPtr e = expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw parse_error(t.line, t.column, "expected " + expected + ", got " + got);
    }
    const Token& expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) fail(peek(), what);
        return next();
    }

    AstPtr expr() {
        AstPtr lhs = term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool plus = next().kind == Token::Kind::Plus;
            AstPtr rhs = term();
            Ast n;
            n.kind = plus ? Ast::Kind::Add : Ast::Kind::Sub;
            n.lhs = std::move(lhs);
            n.rhs = std::move(rhs);
            lhs = make_ast(std::move(n));
        }
        return lhs;
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (accept(Token::Kind::Star)) {
            AstPtr rhs = factor();
            Ast n;
            n.kind = Ast::Kind::Mul;
            n.lhs = std::move(lhs);
            n.rhs = std::move(rhs);
            lhs = make_ast(std::move(n));
        }
        return lhs;
    }

    AstPtr factor() {
        AstPtr base = unary();
        if (accept(Token::Kind::Caret)) {
            Ast n;
            n.kind = Ast::Kind::Pow;
            n.order = nat_literal("a nonnegative integer exponent");
            n.lhs = std::move(base);
            return make_ast(std::move(n));
        }
        return base;
    }

    AstPtr unary() {
        if (accept(Token::Kind::Minus)) {
            Ast n;
            n.kind = Ast::Kind::Neg;
            n.lhs = unary();
            return make_ast(std::move(n));
        }
        return atom();
    }

    int nat_literal(const std::string& what) {
        const Token& t = peek();
        if (t.kind != Token::Kind::Number || denominator(t.number) != 1 || t.number < 0)
            fail(t, what);
        next();
        return t.number.convert_to<int>();
    }

    Rational signed_rational(const std::string& what) {
        bool neg = accept(Token::Kind::Minus);
        const Token& t = peek();
        if (t.kind != Token::Kind::Number) fail(t, what);
        next();
        return neg ? Rational(-t.number) : t.number;
    }

    AstPtr affine_call(Ast::Kind kind, const Token& name_tok) {
        expect(Token::Kind::LParen, "'(' after " + name_tok.text);
        AstPtr inner = expr();
        expect(Token::Kind::RParen, "')'");
        std::optional<Poly> p = fold_smooth(inner);
        if (!p || p->degree() > 1 || !p->coeff(0).is_rational() || !p->coeff(1).is_rational() ||
            p->coeff(1).is_zero())
            throw parse_error(name_tok.line, name_tok.column,
                              "unsupported " + name_tok.text +
                                  " argument: must be affine c*x + d with rational c != 0");
        Ast n;
        n.kind = kind;
        n.affine_c = p->coeff(1).a;
        n.affine_d = p->coeff(0).a;
        return make_ast(std::move(n));
    }

    AstPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                next();
                Ast n;
                n.kind = Ast::Kind::RationalLit;
                n.rat = t.number;
                return make_ast(std::move(n));
            }
            case Token::Kind::LParen: {
                next();
                AstPtr e = expr();
                expect(Token::Kind::RParen, "')'");
                return e;
            }
            case Token::Kind::Ident: {
                next();
                const std::string& id = t.text;
                if (id == "x") {
                    Ast n;
                    n.kind = Ast::Kind::VarX;
                    return make_ast(std::move(n));
                }
                if (id == "sqrt2") {
                    Ast n;
                    n.kind = Ast::Kind::SqrtTwoLit;
                    return make_ast(std::move(n));
                }
                if (id == "H") return affine_call(Ast::Kind::Heaviside, t);
                if (id == "abs") return affine_call(Ast::Kind::Abs, t);
                if (id == "delta") {
                    expect(Token::Kind::LParen, "'(' after delta");
                    Ast n;
                    n.kind = Ast::Kind::Delta;
                    n.rat = signed_rational("a rational point");
                    if (accept(Token::Kind::Comma))
                        n.order = nat_literal("a nonnegative integer order");
                    expect(Token::Kind::RParen, "')'");
                    return make_ast(std::move(n));
                }
                if (id == "D") {
                    expect(Token::Kind::LParen, "'(' after D");
                    Ast n;
                    n.kind = Ast::Kind::DOp;
                    n.lhs = expr();
                    n.order = 1;
                    if (accept(Token::Kind::Comma)) {
                        const Token& num_tok = peek();
                        n.order = nat_literal("a positive integer order");
                        if (n.order < 1) fail(num_tok, "a positive integer order");
                    }
                    expect(Token::Kind::RParen, "')'");
                    return make_ast(std::move(n));
                }
                if (id == "AD") {
                    expect(Token::Kind::LParen, "'(' after AD");
                    Ast n;
                    n.kind = Ast::Kind::ADOp;
                    n.lhs = expr();
                    expect(Token::Kind::RParen, "')'");
                    return make_ast(std::move(n));
                }
                Ast n;
                n.kind = Ast::Kind::Ref;
                n.name = id;
                return make_ast(std::move(n));
            }
            default:
                fail(t, "an expression");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

AstPtr parse(const std::string& src) { return Parser(lex(src)).run(); }

} // namespace distalg::lang
