#pragma once

#include <string>

#include "distalg/lang/ast.hpp"

namespace distalg::lang {

/// Parses an expression. Precedence, loosest to tightest:
/// Add/Sub < Mul < Pow < unary minus; Mul and Add/Sub are
/// left-associative. Throws parse_error with a 1-based position.
AstPtr parse(const std::string& src);

} // namespace distalg::lang
