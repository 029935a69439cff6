#pragma once

#include <string>

#include "distalg/adist.hpp"

namespace distalg::lang {

enum class Format { Plain, Latex, Json };

Format parse_format(const std::string& name); // "plain" | "latex" | "json"
std::string format_name(Format f);

/// Deterministic rendering of the canonical decomposition. The plain
/// form re-parses and evaluates back to an equal distribution: the
/// function part is written as a base polynomial plus jump polynomials
/// times shifted Heavisides, deltas as c*delta(p,n) terms.
std::string print_canonical(const ADist& f, Format format);

std::string print_poly_plain(const Poly& p);

} // namespace distalg::lang
