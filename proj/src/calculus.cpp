#include "hesslab/calculus.hpp"

#include "hesslab/errors.hpp"

namespace hesslab {

poly_map gradient(const polynomial& f) {
    poly_map g;
    g.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
    return g;
}

poly_matrix hessian(const polynomial& f) {
    const std::size_t n = f.nvars();
    poly_matrix H(n, n, f.ctx());
    for (std::size_t i = 0; i < n; ++i) {
        polynomial di = f.derivative(i);
        for (std::size_t j = i; j < n; ++j) {
            polynomial dij = di.derivative(j);
            H.at(i, j) = dij;
            if (i != j) H.at(j, i) = std::move(dij);
        }
    }
    return H;
}

poly_matrix jacobian(const poly_map& F) {
    if (F.empty()) fail(errc::invalid_argument, "calculus", "jacobian of empty map");
    const std::size_t n = F[0].nvars();
    poly_matrix J(F.size(), n, F[0].ctx());
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) J.at(i, j) = F[i].derivative(j);
    return J;
}

polynomial poly_determinant(const poly_matrix& M) {
    if (M.rows != M.cols)
        fail(errc::dimension_mismatch, "calculus", "determinant of non-square matrix");
    const std::size_t n = M.rows;
    if (n > 8) fail(errc::size_limit_exceeded, "calculus", "determinant guarded at n <= 8");
    context_ptr ctx = n ? M.at(0, 0).ctx() : nullptr;
    if (n == 0) fail(errc::invalid_argument, "calculus", "empty matrix");

    // Bareiss: after step k every entry is divisible by the previous pivot.
    poly_matrix a = M;
    polynomial prev = polynomial::constant(ctx, scalar(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return polynomial(ctx); // zero column: det 0
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                polynomial num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = divide_exact(num, prev);
            }
            a.at(i, k) = polynomial(ctx);
        }
        prev = a.at(k, k);
    }
    polynomial det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

polynomial determinant_cofactor(const poly_matrix& M) {
    if (M.rows != M.cols)
        fail(errc::dimension_mismatch, "calculus", "determinant of non-square matrix");
    const std::size_t n = M.rows;
    if (n > 6)
        fail(errc::size_limit_exceeded, "calculus", "cofactor route guarded at n <= 6");
    context_ptr ctx = M.at(0, 0).ctx();
    if (n == 1) return M.at(0, 0);
    polynomial det(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        if (M.at(0, j).is_zero()) continue;
        poly_matrix minor(n - 1, n - 1, ctx);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = M.at(r, c);
            }
        }
        polynomial term = M.at(0, j) * determinant_cofactor(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

polynomial hessian_determinant(const polynomial& f) { return poly_determinant(hessian(f)); }

bool check_chain_rule(const polynomial& f, const transform& T) {
    const std::size_t n = f.nvars();
    if (T.dim() != n) fail(errc::dimension_mismatch, "calculus", "transform dimension mismatch");

    polynomial fT = f.substitute_linear(T.mat());

    // gradient identity
    poly_map lhs_g = gradient(fT);
    poly_map grad_at_T;
    for (const auto& g : gradient(f)) grad_at_T.push_back(g.substitute_linear(T.mat()));
    for (std::size_t i = 0; i < n; ++i) {
        polynomial rhs(f.ctx());
        for (std::size_t k = 0; k < n; ++k)
            rhs += T.mat().at(k, i) * grad_at_T[k]; // (T^t)_{ik} = T_{ki}
        if (lhs_g[i] != rhs) return false;
    }

    // Hessian identity
    poly_matrix lhs_h = hessian(fT);
    poly_matrix H = hessian(f);
    poly_matrix H_at_T(n, n, f.ctx());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H_at_T.at(i, j) = H.at(i, j).substitute_linear(T.mat());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            polynomial rhs(f.ctx());
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    rhs += (T.mat().at(k, i) * T.mat().at(l, j)) * H_at_T.at(k, l);
            if (lhs_h.at(i, j) != rhs) return false;
        }
    return true;
}

} // namespace hesslab
