#pragma once

#include <memory>
#include <string>

#include "distalg/rational.hpp"

namespace distalg::lang {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

/// Surface syntax tree. Heaviside/Abs arguments are folded to the
/// affine form c*x + d (rational c != 0) at parse time.
struct Ast {
    enum class Kind {
        RationalLit, // rat
        SqrtTwoLit,
        VarX,
        Heaviside, // H(affine_c * x + affine_d)
        Abs,       // abs(affine_c * x + affine_d)
        Delta,     // delta(rat, order)
        Add,       // lhs + rhs
        Sub,       // lhs - rhs
        Neg,       // -lhs
        Mul,       // lhs * rhs (the session's *_M)
        Pow,       // lhs ^ order, smooth operand only
        DOp,       // D(lhs, order)
        ADOp,      // AD(lhs)
        Ref,       // name
    };

    Kind kind;
    Rational rat;        // RationalLit value, Delta point
    int order = 0;       // Delta/DOp order, Pow exponent
    Rational affine_c;   // Heaviside/Abs argument
    Rational affine_d;
    std::string name;    // Ref
    AstPtr lhs, rhs;
};

AstPtr make_ast(Ast node);
bool ast_equal(const AstPtr& a, const AstPtr& b);

} // namespace distalg::lang
