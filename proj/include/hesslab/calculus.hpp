#pragma once

#include "hesslab/poly.hpp"

namespace hesslab {

/// Gradient map of f: component i is df/dx_i.
poly_map gradient(const polynomial& f);

/// Symmetric matrix of second partials.
poly_matrix hessian(const polynomial& f);

/// Jacobian of a polynomial map: row i, column j is dF_i/dx_j.
poly_matrix jacobian(const poly_map& F);

/// Exact determinant by fraction-free (Bareiss) elimination over the
/// polynomial ring.  Guarded at n <= 8.
polynomial poly_determinant(const poly_matrix& M);

/// Independent determinant by cofactor expansion; kept textually separate so
/// the two routes can cross-check each other.
polynomial determinant_cofactor(const poly_matrix& M);

/// det of the Hessian of f, the quantity everything here revolves around.
polynomial hessian_determinant(const polynomial& f);

/// Verify grad f(Tx) = T^t (grad f)|_{x=Tx} and
/// H f(Tx) = T^t (H f)|_{x=Tx} T exactly for this f and T.
bool check_chain_rule(const polynomial& f, const transform& T);

} // namespace hesslab
