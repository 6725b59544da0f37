#include "hesslab/gradmap.hpp"

#include "hesslab/calculus.hpp"
#include "hesslab/errors.hpp"

namespace hesslab {

keller_result keller_check(const poly_map& F) {
    polynomial det = poly_determinant(jacobian(F));
    return {det.is_constant() && !det.is_zero(), det};
}

inverse_witness invert_antitriangular(const poly_map& F) {
    if (F.empty()) fail(errc::invalid_argument, "gradmap", "empty map");
    const std::size_t n = F.size();
    const context_ptr& ctx = F[0].ctx();
    if (ctx->vars.size() != n)
        fail(errc::dimension_mismatch, "gradmap", "component count must match dimension");

    poly_matrix J = jacobian(F);
    if (!J.is_zero_below_antidiagonal())
        fail(errc::not_anti_triangular, "gradmap", "Jacobian has entries below the anti-diagonal");
    std::vector<scalar> constants(n);
    for (std::size_t i = 0; i < n; ++i) {
        const polynomial& e = J.at(i, n - 1 - i);
        if (!e.is_constant() || e.is_zero())
            fail(errc::non_constant_anti_diagonal, "gradmap",
                 "anti-diagonal entry (" + std::to_string(i + 1) + ", " + std::to_string(n - i) +
                     ") is not a nonzero constant");
        constants[i] = e.constant_value();
    }

    // F_{n+1-i} = c_i x_i + P_i(x_1..x_{i-1}); solve x_i from the bottom up,
    // substituting the inverses already known.  G_i is x_i in terms of y,
    // where the free variables stand for y.
    poly_map G(n, polynomial(ctx));
    for (std::size_t i = 1; i <= n; ++i) {
        // component index of F carrying x_i: n+1-i (1-based) -> n-i (0-based)
        const polynomial& comp = F[n - i];
        // P = comp - c_i x_i depends on x_1..x_{i-1} only
        polynomial P = comp;
        P -= constants[i - 1] * polynomial::variable(ctx, i - 1);
        auto sup = P.var_support();
        for (std::size_t j = i - 1; j < n; ++j)
            if (sup[j])
                fail(errc::not_anti_triangular, "gradmap",
                     "component " + std::to_string(n - i + 1) + " depends on x" +
                         std::to_string(j + 1));
        // substitute the already-inverted coordinates into P
        std::vector<polynomial> images;
        images.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            images.push_back(j + 1 < i ? G[j] : polynomial::variable(ctx, j));
        polynomial Py = P.substitute_vars(images);
        polynomial xi = polynomial::variable(ctx, n - i); // y_{n+1-i}
        xi -= Py;
        G[i - 1] = xi.scaled(constants[i - 1].inverse());
        if (G[i - 1].degree() > 512)
            fail(errc::degree_guard_exceeded, "gradmap", "inverse degree exceeds the guard");
    }

    if (!is_identity_map(compose(F, G)) || !is_identity_map(compose(G, F)))
        fail(errc::internal_error, "gradmap", "computed inverse fails the composition check");
    return {std::move(G), std::move(constants)};
}

bool verify_unipotent(const poly_map& F) {
    if (F.empty()) fail(errc::invalid_argument, "gradmap", "empty map");
    const std::size_t n = F.size();
    const context_ptr& ctx = F[0].ctx();
    poly_matrix J = jacobian(F);
    if (J.cols != n) fail(errc::dimension_mismatch, "gradmap", "map is not square");

    poly_matrix M = J;
    for (std::size_t i = 0; i < n; ++i)
        M.at(i, i) -= polynomial::constant(ctx, scalar(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (!M.at(i, j).is_zero()) return false;

    // nilpotency is implied; assert M^n = 0 exactly anyway
    poly_matrix power = M;
    for (std::size_t k = 1; k < n; ++k) {
        poly_matrix next(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    next.at(i, j) += power.at(i, l) * M.at(l, j);
        power = std::move(next);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!power.at(i, j).is_zero())
                fail(errc::internal_error, "gradmap", "(J F - I)^n is not zero");
    return true;
}

} // namespace hesslab
