#pragma once

#include "hesslab/poly.hpp"
#include "hesslab/quadform.hpp"

namespace hesslab {
namespace fixtures {

/// f = x1 x2 + t x1 x2^2 + (x2 + x1 x3)^3 + x1^4 (1 + x4) + (x5^7 + ... + xn^{n+2})
/// over Q with the formal parameter t, for n >= 4.  Its Hessian determinant
/// is t times a fixed closed-form polynomial.
polynomial gn_counterexample(std::size_t n);

/// The closed form g with det H f = t * g:
/// g = -(1/450) (n+1)! (n+2)! x1^9 (x2 + x1 x3) x5^5 ... xn^n.
polynomial gn_closed_form(std::size_t n);

/// f = (x1 + x2^2) x3 + (x2 + (x1 + x2^2)^2) x4: constant nonzero Hessian
/// determinant in dimension four, with cubic part x2^2 x3 + x1^2 x4.
polynomial dimension_four_blocker();

/// x1^2 + 3 x2^2 + 5 x3^2 + 10 x4^2 as a quadratic form over Q(i);
/// anisotropic, certified by a 5-adic descent through (2+i) and (2-i).
quadratic_form qi_quartic_form();

} // namespace fixtures
} // namespace hesslab
