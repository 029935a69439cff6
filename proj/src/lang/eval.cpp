#include "distalg/lang/eval.hpp"

#include "distalg/calculus.hpp"
#include "distalg/errors.hpp"
#include "distalg/products.hpp"

namespace distalg::lang {

bool is_reserved_name(const std::string& name) {
    return name == "x" || name == "H" || name == "abs" || name == "delta" || name == "D" ||
           name == "AD" || name == "sqrt2";
}

ADist eval_ast(const AstPtr& a, const Env& env) {
    switch (a->kind) {
        case Ast::Kind::RationalLit: return from_scalar(Scalar(a->rat));
        case Ast::Kind::SqrtTwoLit: return from_scalar(Scalar::sqrt2());
        case Ast::Kind::VarX: return from_smooth(Poly::x());
        case Ast::Kind::Heaviside: {
            Rational root = -a->affine_d / a->affine_c;
            return a->affine_c > 0 ? heaviside(root) : mirrored_heaviside(root);
        }
        case Ast::Kind::Abs: {
            // |c x + d| = |c| * |x - root|
            Rational root = -a->affine_d / a->affine_c;
            return scale(Scalar(abs(a->affine_c)), abs_shift(root));
        }
        case Ast::Kind::Delta: return delta_dist(a->rat, a->order);
        case Ast::Kind::Add: return add(eval_ast(a->lhs, env), eval_ast(a->rhs, env));
        case Ast::Kind::Sub:
            return add(eval_ast(a->lhs, env), scale(Scalar(-1), eval_ast(a->rhs, env)));
        case Ast::Kind::Neg: return scale(Scalar(-1), eval_ast(a->lhs, env));
        case Ast::Kind::Mul:
            return star_m(eval_ast(a->lhs, env), eval_ast(a->rhs, env), env.current_m);
        case Ast::Kind::Pow: {
            ADist base = eval_ast(a->lhs, env);
            if (!base.is_smooth())
                throw type_error("powers of distributions are undefined");
            return from_smooth(base.smooth_piece().pow(a->order));
        }
        case Ast::Kind::DOp: return derivative(eval_ast(a->lhs, env), a->order);
        case Ast::Kind::ADOp: return antiderivative(eval_ast(a->lhs, env));
        case Ast::Kind::Ref: {
            auto it = env.bindings.find(a->name);
            if (it == env.bindings.end()) throw type_error("unbound name '" + a->name + "'");
            return it->second;
        }
    }
    throw error("unreachable AST kind");
}

} // namespace distalg::lang
