#pragma once

#include "hesslab/poly.hpp"

#include <string>

namespace hesslab {

/// Parse polynomial text over the given context.
///
/// Grammar (ASCII): integers, rationals `p/q`, the imaginary unit `i` (only
/// when the field is Q(i)), declared variables and parameters, operators
/// `+ - * ^` and parentheses; `^` binds tightest, unary minus is allowed.
/// Powers of parenthesized sums are expanded eagerly.
///
/// Throws SyntaxError (with position) or UnknownVariable.
polynomial parse_poly(const std::string& text, const context_ptr& ctx);

} // namespace hesslab
