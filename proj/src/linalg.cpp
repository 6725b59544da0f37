#include "hesslab/linalg.hpp"

#include "hesslab/errors.hpp"

namespace hesslab {

scalar_matrix anti_lower_factorize(const scalar_matrix& M, field_kind field) {
    const std::size_t n = M.rows();
    if (n == 0 || M.cols() != n)
        fail(errc::dimension_mismatch, "exact_linalg", "factorization needs a square matrix");
    if (!M.is_symmetric()) fail(errc::not_symmetric, "exact_linalg", "matrix is not symmetric");
    if (!M.is_zero_below_antidiagonal())
        fail(errc::not_anti_triangular, "exact_linalg", "matrix has entries below the anti-diagonal");

    const std::size_t m = n / 2;
    const bool odd = n % 2 != 0;
    scalar c(1);
    if (odd) {
        auto root = sqrt_in_field(M.at(m, m), field);
        if (!root)
            fail(errc::middle_entry_not_square, "exact_linalg",
                 "middle entry " + M.at(m, m).str() + " is not a square in " + field_name(field));
        c = *root;
    }

    // Block shape of M: [[A, b, B], [b^t, c^2, 0], [B^t, 0, 0]] where the
    // middle row/column exists only for odd n.  Then L below satisfies
    // L^t J L = M with L lower triangular.
    scalar_matrix L(n, n);
    for (std::size_t i = 0; i < m; ++i) L.at(i, i) = scalar(1);
    if (odd) L.at(m, m) = c;
    const std::size_t off = odd ? m + 1 : m; // first bottom-block row
    const scalar half = scalar::from_fraction(1, 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            L.at(off + i, j) = half * M.at(m - 1 - i, j);          // (1/2) J_m A
        if (odd) L.at(off + i, m) = M.at(m - 1 - i, m);            // J_m b
        for (std::size_t j = 0; j < m; ++j)
            L.at(off + i, off + j) = M.at(m - 1 - i, off + j);     // J_m B
    }
    return L;
}

diagonalize_result diagonalize_symmetric(const scalar_matrix& M, field_kind field,
                                         bool normalize_units) {
    const std::size_t n = M.rows();
    if (M.cols() != n)
        fail(errc::dimension_mismatch, "exact_linalg", "diagonalization needs a square matrix");
    if (!M.is_symmetric()) fail(errc::not_symmetric, "exact_linalg", "matrix is not symmetric");

    scalar_matrix A = M;
    scalar_matrix S = scalar_matrix::identity(n);
    auto apply_col = [&](std::size_t dst, std::size_t src, const scalar& factor) {
        // column op: col_dst += factor * col_src, mirrored on rows
        for (std::size_t i = 0; i < n; ++i) A.at(i, dst) += factor * A.at(i, src);
        for (std::size_t j = 0; j < n; ++j) A.at(dst, j) += factor * A.at(src, j);
        for (std::size_t i = 0; i < n; ++i) S.at(i, dst) += factor * S.at(i, src);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(A.at(i, a), A.at(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(A.at(a, j), A.at(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(S.at(i, a), S.at(i, b));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (A.at(k, k).is_zero()) {
            std::size_t d = k + 1;
            while (d < n && A.at(d, d).is_zero()) ++d;
            if (d < n) {
                swap_cols(k, d);
            } else {
                // all remaining diagonal entries are zero; borrow an
                // off-diagonal one (char 0, so the 2 M_kj pivot is usable)
                std::size_t j = k + 1;
                while (j < n && A.at(k, j).is_zero()) ++j;
                if (j == n) continue; // row/column already clear
                apply_col(k, j, scalar(1));
            }
        }
        scalar pivot = A.at(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (A.at(k, j).is_zero()) continue;
            apply_col(j, k, -(A.at(k, j) / pivot));
        }
    }

    if (normalize_units) {
        for (std::size_t k = 0; k < n; ++k) {
            if (A.at(k, k).is_zero()) continue;
            auto root = sqrt_in_field(A.at(k, k).inverse(), field);
            if (!root)
                fail(errc::square_root_unavailable, "exact_linalg",
                     "1/" + A.at(k, k).str() + " has no square root in " + field_name(field));
            for (std::size_t i = 0; i < n; ++i) S.at(i, k) *= *root;
            A.at(k, k) = scalar(1);
        }
    }

    diagonalize_result out{transform::make(S), scalar_matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) out.D.at(k, k) = A.at(k, k);
    return out;
}

scalar_matrix right_flag_complement(const scalar_matrix& M) {
    const std::size_t m = M.rows();
    if (M.cols() != m)
        fail(errc::dimension_mismatch, "exact_linalg", "flag complement needs a square matrix");
    if (m == 0) fail(errc::invalid_argument, "exact_linalg", "empty matrix");

    scalar_matrix S(m, m);
    std::vector<std::vector<scalar>> chosen;

    auto independent = [&](const std::vector<scalar>& v) {
        scalar_matrix probe(m, chosen.size() + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t c = 0; c < chosen.size(); ++c) probe.at(i, c) = chosen[c][i];
            probe.at(i, chosen.size()) = v[i];
        }
        return probe.rank() == chosen.size() + 1;
    };

    // Columns right to left; the k-th column from the right is orthogonal to
    // rows k+1..m of M, so column c (0-based) lies in the kernel of rows
    // m-c..m-1.  The rightmost column is the most constrained one.
    for (std::size_t cc = 0; cc < m; ++cc) {
        std::size_t c = m - 1 - cc;          // current column, right to left
        std::size_t first_row = m - c;       // rows first_row..m-1 constrain it
        std::size_t nrows = m - first_row;
        scalar_matrix constraints(nrows, m);
        for (std::size_t r = first_row; r < m; ++r)
            for (std::size_t j = 0; j < m; ++j) constraints.at(r - first_row, j) = M.at(r, j);

        std::optional<std::vector<scalar>> pick;
        // prefer unit vectors of lowest index
        for (std::size_t u = 0; u < m && !pick; ++u) {
            std::vector<scalar> e(m);
            e[u] = scalar(1);
            bool ok = true;
            for (std::size_t r = first_row; r < m; ++r)
                if (!M.at(r, u).is_zero()) ok = false;
            if (ok && independent(e)) pick = std::move(e);
        }
        if (!pick && nrows > 0) {
            for (auto& v : constraints.nullspace()) {
                if (independent(v)) {
                    pick = std::move(v);
                    break;
                }
            }
        }
        if (!pick)
            fail(errc::rank_deficient, "exact_linalg",
                 "nested orthogonal complements do not exist for this matrix");
        for (std::size_t i = 0; i < m; ++i) S.at(i, c) = (*pick)[i];
        chosen.push_back(std::move(*pick));
    }

    scalar_matrix prod = M * S;
    if (!prod.is_zero_below_antidiagonal())
        fail(errc::internal_error, "exact_linalg", "flag complement postcondition failed");
    return S;
}

} // namespace hesslab
