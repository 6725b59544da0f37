#pragma once

#include "hesslab/poly.hpp"

namespace hesslab {

struct keller_result {
    bool is_keller;
    polynomial det; // det J F, exact
};

/// Keller condition: det J F is a nonzero constant.
keller_result keller_check(const poly_map& F);

/// Exact inverse of a map whose Jacobian is zero below the anti-diagonal
/// with nonzero constant anti-diagonal entries.
struct inverse_witness {
    poly_map G;
    std::vector<scalar> constants; // c1..cn, left to right on the anti-diagonal
};

/// Back-substitution from the bottom component upward; both compositions are
/// verified to be the identity before returning.  Intermediate degree growth
/// is guarded at 512.
inverse_witness invert_antitriangular(const poly_map& F);

/// True iff J F - I is lower triangular with zero diagonal (and hence
/// nilpotent); (J F - I)^n = 0 is additionally asserted in that case.
bool verify_unipotent(const poly_map& F);

} // namespace hesslab
