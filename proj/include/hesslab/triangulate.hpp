#pragma once

#include "hesslab/poly.hpp"
#include "hesslab/quadform.hpp"
#include "hesslab/univariate.hpp"
#include "hesslab/weights.hpp"

#include <optional>
#include <vector>

namespace hesslab {

/// Basis of all constant vectors lambda with J h . lambda = 0 as an exact
/// polynomial identity.  Nonempty iff h can be written in fewer linear forms
/// than variables.
std::vector<std::vector<scalar>> directional_kernel(const polynomial& h);

/// T with the kernel basis as its last columns, so h(Tx) is free of the last
/// dim(basis) variables (verified exactly).
transform make_degenerate_transform(const polynomial& h,
                                    const std::vector<std::vector<scalar>>& basis);

/// Classification of polynomials with zero Hessian determinant, n <= 3.
enum class zero_hessian_class { in_one_form, in_two_forms, rank1_family, non_degenerate };

struct classification {
    zero_hessian_class tag = zero_hessian_class::non_degenerate;
    /// Coefficient rows of the linear forms: l1 (and l2 for two forms; l4 for
    /// the rank-1 family).
    std::vector<std::vector<scalar>> forms;
    /// g1, g2, g3 with h = g1(l1) x1 + g2(l1) x2 + g3(l1) x3 (rank-1 family).
    std::vector<unipoly> family;
    /// A transform T with h(Tx) expressed in the reduced variables; for the
    /// rank-1 family, l1(Tx) = x1.
    transform T = transform::identity(1);
};

classification classify_zero_hessian(const polynomial& h);

/// Reassemble h from its classification data (used by the tests to confirm
/// the reconstruction is exact).
polynomial reconstruct_classification(const classification& cls, const context_ptr& ctx);

struct adapted_weight {
    transform T;
    weight_fn w;
    polynomial leading; // w-leading part of f(Tx), nonzero Hessian determinant
};

/// Search for T and 0 < w(x1) <= ... <= w(xn) with det H of the w-leading
/// part of f(Tx) nonzero.  Guaranteed to terminate within the budget for
/// n <= 3; for n >= 4 the walk is budget-bounded and expected to fail
/// (BudgetExceeded) on the known counterexamples.
adapted_weight find_adapted_weight(const polynomial& f, unsigned budget = 64);

enum class witness_route { trivial, zero_hessian, weight_search, quadratic_isotropy };

/// T with H f(Tx) exactly zero below the anti-diagonal, plus the data that
/// certifies it.  Constructed only through make_anti_tri_witness, which
/// re-derives the Hessian and checks every invariant.
struct anti_tri_witness {
    transform T;
    witness_route route = witness_route::trivial;
    std::optional<weight_fn> w;
    std::optional<polynomial> leading;
    /// Anti-diagonal constants c1..cn (left to right), present iff
    /// det H f is a nonzero constant.
    std::optional<std::vector<scalar>> anti_diagonal_constants;
};

anti_tri_witness make_anti_tri_witness(const polynomial& f, const transform& T,
                                       witness_route route,
                                       std::optional<weight_fn> w = std::nullopt,
                                       std::optional<polynomial> leading = std::nullopt);

struct clear_options {
    bool raise_j = false;  // optional index-raising tweak, off by default
    long height = 50;      // isotropy search bound for the congruence branch
};

/// Clear every entry below the anti-diagonal of H f(Tx) by block updates of
/// T.  Requires the weight hypotheses (nonzero leading Hessian determinant,
/// constant term in the leading part of det H f(Tx)).
anti_tri_witness clear_below_antidiagonal(const polynomial& f, const transform& T,
                                          const weight_fn& w, const clear_options& opts = {});

struct linear_normalization {
    transform L; // lower triangular
    scalar c;
};

/// Lower-triangular L with H f(TLx) still anti-triangular and constant part
/// c * J.  For odd n over Q, c is pinned to the middle anti-diagonal entry.
linear_normalization normalize_linear_part(const polynomial& f, const transform& T);

struct pipeline_options {
    unsigned budget = 64;
    long height = 50;
};

/// Outcome of the full pipeline: either an anti-triangularizing witness or,
/// for quadratics with anisotropic quadratic part, the obstruction that
/// proves no such T exists.
struct pipeline_result {
    std::optional<anti_tri_witness> witness;
    std::optional<descent_certificate> obstruction;
};

pipeline_result dillen_pipeline(const polynomial& f, const pipeline_options& opts = {});

} // namespace hesslab
