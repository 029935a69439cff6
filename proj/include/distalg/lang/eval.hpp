#pragma once

#include <map>
#include <string>

#include "distalg/adist.hpp"
#include "distalg/lang/ast.hpp"
#include "distalg/mset.hpp"

namespace distalg::lang {

/// Session state: name bindings plus the product parameter M
/// (default R, so `*` starts out as the one-sided product).
struct Env {
    std::map<std::string, ADist> bindings;
    MSet current_m = MSet::all();
};

bool is_reserved_name(const std::string& name);

/// Structural evaluation; Mul is *_M for the session's M.
ADist eval_ast(const AstPtr& a, const Env& env);

} // namespace distalg::lang
