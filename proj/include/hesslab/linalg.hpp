#pragma once

#include "hesslab/matrix.hpp"

namespace hesslab {

/// Factor a symmetric matrix M that is zero below the anti-diagonal as
/// M = L^t J L with L lower triangular and J the flipped identity.
/// When n is odd the middle entry must be a square in the field.
scalar_matrix anti_lower_factorize(const scalar_matrix& M, field_kind field);

struct diagonalize_result {
    transform S;     // S^t M S = D
    scalar_matrix D; // diagonal
};

/// Congruence-diagonalize a symmetric matrix.  With normalize_units the
/// nonzero diagonal entries are scaled to 1, which requires their inverse
/// square roots to exist in the field (SquareRootUnavailable otherwise).
diagonalize_result diagonalize_symmetric(const scalar_matrix& M, field_kind field,
                                         bool normalize_units = false);

/// Build an invertible S whose k-th column from the right is orthogonal to
/// rows k+1, k+2, ... of M, so that M*S is zero below the anti-diagonal.
/// Columns are chosen right to left, preferring unit vectors of lowest index.
scalar_matrix right_flag_complement(const scalar_matrix& M);

} // namespace hesslab
