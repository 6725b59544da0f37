#include "hesslab/triangulate.hpp"

#include "hesslab/calculus.hpp"
#include "hesslab/errors.hpp"
#include "hesslab/linalg.hpp"

#include <algorithm>
#include <map>

namespace hesslab {

namespace {

// Bitmask of supported variables; realignments must strictly decrease it,
// which both compacts the support toward x1 and bounds realign chains.
unsigned long support_mask(const polynomial& p) {
    unsigned long m = 0;
    auto sup = p.var_support();
    for (std::size_t i = 0; i < sup.size(); ++i)
        if (sup[i]) m |= 1ul << i;
    return m;
}

// Greedy completion: the given vectors become the LAST columns, the front is
// filled with the lowest-index unit vectors that keep the matrix invertible.
scalar_matrix complete_columns_back(const std::vector<std::vector<scalar>>& last_cols,
                                    std::size_t n) {
    std::vector<std::vector<scalar>> cols;
    auto independent_with = [&](const std::vector<scalar>& v,
                               const std::vector<std::vector<scalar>>& have) {
        scalar_matrix probe(n, have.size() + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < have.size(); ++c) probe.at(i, c) = have[c][i];
            probe.at(i, have.size()) = v[i];
        }
        return probe.rank() == have.size() + 1;
    };
    std::vector<std::vector<scalar>> picked;
    for (std::size_t u = 0; u < n && picked.size() + last_cols.size() < n; ++u) {
        std::vector<scalar> e(n);
        e[u] = scalar(1);
        std::vector<std::vector<scalar>> have = picked;
        have.insert(have.end(), last_cols.begin(), last_cols.end());
        if (independent_with(e, have)) picked.push_back(std::move(e));
    }
    if (picked.size() + last_cols.size() != n)
        fail(errc::internal_error, "triangulate", "could not complete to a basis");
    scalar_matrix T(n, n);
    std::size_t col = 0;
    for (const auto& v : picked) {
        for (std::size_t i = 0; i < n; ++i) T.at(i, col) = v[i];
        ++col;
    }
    for (const auto& v : last_cols) {
        for (std::size_t i = 0; i < n; ++i) T.at(i, col) = v[i];
        ++col;
    }
    return T;
}

// Invertible R with the given rows first; returns T = R^{-1}, so that the
// forms become coordinates: l_k(Tx) = x_k.
transform transform_sending_forms_to_coords(const std::vector<std::vector<scalar>>& rows,
                                            std::size_t n) {
    std::vector<std::vector<scalar>> have = rows;
    auto rank_of = [&](const std::vector<std::vector<scalar>>& rs) {
        scalar_matrix probe(rs.size(), n);
        for (std::size_t r = 0; r < rs.size(); ++r)
            for (std::size_t j = 0; j < n; ++j) probe.at(r, j) = rs[r][j];
        return probe.rank();
    };
    if (rank_of(have) != have.size())
        fail(errc::internal_error, "triangulate", "dependent forms");
    for (std::size_t u = 0; u < n && have.size() < n; ++u) {
        std::vector<scalar> e(n);
        e[u] = scalar(1);
        have.push_back(e);
        if (rank_of(have) != have.size()) have.pop_back();
    }
    scalar_matrix R(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) R.at(r, j) = have[r][j];
    return transform::make(R.inverse());
}

scalar_matrix embed_block(std::size_t n, const scalar_matrix& B, std::size_t offset) {
    scalar_matrix R = scalar_matrix::identity(n);
    for (std::size_t a = 0; a < B.rows(); ++a)
        for (std::size_t b = 0; b < B.cols(); ++b) R.at(offset + a, offset + b) = B.at(a, b);
    return R;
}

// Coefficient matrix of the identity sum(lambda_i d_i h) = 0.
scalar_matrix kernel_system(const polynomial& h, const std::vector<std::size_t>& zero_indices) {
    const std::size_t n = h.nvars();
    std::vector<polynomial> partials;
    for (std::size_t i = 0; i < n; ++i) partials.push_back(h.derivative(i));
    std::map<exponents, std::size_t, term_order_less> row_of;
    for (const auto& p : partials)
        for (const auto& [e, c] : p.terms())
            row_of.emplace(e, row_of.size());
    scalar_matrix A(row_of.size() + zero_indices.size(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [e, c] : partials[i].terms()) A.at(row_of.at(e), i) = c;
    std::size_t extra = row_of.size();
    for (std::size_t i : zero_indices) A.at(extra++, i) = scalar(1);
    return A;
}

std::vector<std::vector<scalar>> kernel_in_span(const polynomial& h,
                                                const std::vector<std::size_t>& span) {
    std::vector<std::size_t> zero;
    std::vector<bool> in_span(h.nvars(), false);
    for (std::size_t i : span) in_span[i] = true;
    for (std::size_t i = 0; i < h.nvars(); ++i)
        if (!in_span[i]) zero.push_back(i);
    return kernel_system(h, zero).nullspace();
}

struct binary_factor {
    std::vector<scalar> coeffs; // (a, b): the form a*x_va + b*x_vb
    unsigned mult;
};

// Linear factors over the field of a form supported on two variables.
std::vector<binary_factor> binary_linear_factors(const polynomial& B, std::size_t va,
                                                 std::size_t vb, field_kind field) {
    std::vector<binary_factor> out;
    if (B.is_zero()) return out;
    int max_a = B.degree_in_var(va);
    unsigned vb_mult = unsigned(B.degree());
    for (const auto& [e, c] : B.terms()) vb_mult = std::min(vb_mult, e[vb]);
    std::vector<scalar> coeffs(std::size_t(max_a) + 1);
    for (const auto& [e, c] : B.terms()) coeffs[e[va]] = c;
    unipoly P(std::move(coeffs));
    if (vb_mult > 0) out.push_back({{scalar(0), scalar(1)}, vb_mult});
    for (const auto& [root, mult] : roots_in_field(P, field)) {
        std::vector<scalar> l{scalar(1), -root};
        out.push_back({std::move(l), mult});
    }
    return out;
}

scalar_matrix constant_block(const poly_matrix& H, std::size_t r0, std::size_t c0,
                             std::size_t m, const char* who) {
    scalar_matrix M(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const polynomial& p = H.at(r0 + a, c0 + b);
            if (!p.is_constant())
                fail(errc::hypotheses_unmet, "triangulate",
                     std::string(who) + ": block entry is not constant");
            M.at(a, b) = p.constant_value();
        }
    return M;
}

scalar bilinear(const scalar_matrix& M, const std::vector<scalar>& a,
                const std::vector<scalar>& b) {
    scalar out(0);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out += a[i] * M.at(i, j) * b[j];
    return out;
}

// Congruence R with R^t M R zero below the anti-diagonal, built from an
// isotropic vector of M (M constant symmetric invertible, size 2 or 3).
scalar_matrix antitriangularize_congruence(const scalar_matrix& M, field_kind field,
                                           long height) {
    const std::size_t m = M.rows();
    quadratic_form Q{M, field};
    isotropy_result iso = isotropy_search(Q, height);
    if (iso.outcome == isotropy_result::kind::anisotropic)
        fail(errc::square_root_unavailable, "triangulate",
             "the central block is anisotropic over " + field_name(field) +
                 "; no anti-triangularizing congruence exists");
    if (iso.outcome == isotropy_result::kind::unknown)
        fail(errc::square_root_unavailable, "triangulate",
             "no isotropic vector found up to height " + std::to_string(iso.height));
    const std::vector<scalar>& v = iso.witness;

    auto unit = [&](std::size_t u) {
        std::vector<scalar> e(m);
        e[u] = scalar(1);
        return e;
    };
    auto lowest_unit_pairing = [&]() {
        for (std::size_t u = 0; u < m; ++u)
            if (!bilinear(M, unit(u), v).is_zero()) return unit(u);
        fail(errc::internal_error, "triangulate", "isotropic vector pairs to zero with all units");
    };

    scalar_matrix R(m, m);
    if (m == 2) {
        auto u1 = lowest_unit_pairing();
        for (std::size_t i = 0; i < m; ++i) {
            R.at(i, 0) = u1[i];
            R.at(i, 1) = v[i];
        }
    } else if (m == 3) {
        // u2: orthogonal to v with nonzero self-pairing
        std::optional<std::vector<scalar>> u2;
        auto try_u2 = [&](const std::vector<scalar>& w) {
            if (!u2 && bilinear(M, w, v).is_zero() && !bilinear(M, w, w).is_zero()) u2 = w;
        };
        for (std::size_t u = 0; u < m; ++u) try_u2(unit(u));
        if (!u2) {
            scalar_matrix row(1, m);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t i = 0; i < m; ++i) row.at(0, j) += v[i] * M.at(i, j);
            auto basis = row.nullspace();
            for (const auto& b : basis) try_u2(b);
            if (basis.size() == 2) {
                std::vector<scalar> s1(m), s2(m);
                for (std::size_t i = 0; i < m; ++i) {
                    s1[i] = basis[0][i] + basis[1][i];
                    s2[i] = basis[0][i] - basis[1][i];
                }
                try_u2(s1);
                try_u2(s2);
            }
        }
        if (!u2) fail(errc::internal_error, "triangulate", "no anisotropic vector orthogonal to v");
        auto u1 = lowest_unit_pairing();
        for (std::size_t i = 0; i < m; ++i) {
            R.at(i, 0) = u1[i];
            R.at(i, 1) = (*u2)[i];
            R.at(i, 2) = v[i];
        }
    } else {
        fail(errc::unsupported_dimension, "triangulate",
             "congruence block of size " + std::to_string(m));
    }
    scalar_matrix check = R.transpose() * M * R;
    if (R.determinant().is_zero() || !check.is_zero_below_antidiagonal())
        fail(errc::internal_error, "triangulate", "congruence postcondition failed");
    return R;
}

} // namespace

std::vector<std::vector<scalar>> directional_kernel(const polynomial& h) {
    return kernel_system(h, {}).nullspace();
}

transform make_degenerate_transform(const polynomial& h,
                                    const std::vector<std::vector<scalar>>& basis) {
    if (basis.empty()) fail(errc::empty_kernel, "triangulate", "kernel basis is empty");
    const std::size_t n = h.nvars();
    transform T = transform::make(complete_columns_back(basis, n));
    polynomial moved = h.substitute_linear(T.mat());
    auto sup = moved.var_support();
    for (std::size_t i = n - basis.size(); i < n; ++i)
        if (sup[i])
            fail(errc::internal_error, "triangulate",
                 "transform did not eliminate the kernel directions");
    return T;
}

// ---------------------------------------------------------------- classify --

namespace {

// Roots of multiplicity >= need of the univariate specialization of hbar.
std::vector<scalar> high_mult_roots(const polynomial& hbar, std::size_t axis, long s, long t,
                                    unsigned need, field_kind field) {
    const std::size_t n = 3;
    std::vector<scalar> roots;
    std::vector<scalar> point(n);
    // axis carries the variable u; the others take the fixed values s, t
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != axis) others.push_back(i);
    point[others[0]] = scalar(s);
    point[others[1]] = scalar(t);

    int du = hbar.degree_in_var(axis);
    if (du < 0) return roots;
    std::vector<scalar> coeffs(std::size_t(du) + 1);
    for (const auto& [e, c] : hbar.terms()) {
        scalar val = c;
        for (std::size_t i : others) val = val * point[i].pow(e[i]);
        coeffs[e[axis]] += val;
    }
    unipoly P{std::move(coeffs)};
    if (P.is_zero()) return roots;
    for (const auto& [r, m] : roots_in_field(P, field))
        if (m >= need) roots.push_back(r);
    return roots;
}

std::vector<std::vector<scalar>> rank1_l1_candidates(const polynomial& hbar, int D,
                                                     field_kind field) {
    std::vector<std::vector<scalar>> out;
    const unsigned need = unsigned(D - 1);
    auto push = [&](std::vector<scalar> l) {
        normalize_primitive(l);
        bool zero = std::all_of(l.begin(), l.end(), [](const scalar& s) { return s.is_zero(); });
        if (zero) return;
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    };

    // l1 = x1 + p x2 + q x3: two independent specializations determine (p, q)
    struct spec_pt {
        long s, t;
    };
    const spec_pt pts[] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {-1, 1}};
    std::vector<std::pair<spec_pt, scalar>> hits;
    for (const auto& pt : pts)
        for (const auto& r : high_mult_roots(hbar, 0, pt.s, pt.t, need, field))
            hits.push_back({pt, r});
    for (std::size_t a = 0; a < hits.size(); ++a)
        for (std::size_t b = a + 1; b < hits.size(); ++b) {
            long det = hits[a].first.s * hits[b].first.t - hits[a].first.t * hits[b].first.s;
            if (det == 0) continue;
            // solve p*s + q*t = -root for both points
            scalar inv = scalar(det).inverse();
            scalar p = (scalar(hits[b].first.t) * (-hits[a].second) -
                        scalar(hits[a].first.t) * (-hits[b].second)) *
                       inv;
            scalar q = (scalar(hits[a].first.s) * (-hits[b].second) -
                        scalar(hits[b].first.s) * (-hits[a].second)) *
                       inv;
            push({scalar(1), p, q});
        }

    // l1 = x2 + q x3
    for (const auto& pt : pts) {
        if (pt.t == 0) continue;
        for (const auto& r : high_mult_roots(hbar, 1, pt.s, pt.t, need, field))
            push({scalar(0), scalar(1), -(r / scalar(pt.t))});
    }

    // l1 = x3
    push({scalar(0), scalar(0), scalar(1)});
    return out;
}

std::optional<std::vector<unipoly>> solve_rank1_family(const polynomial& h,
                                                       const std::vector<scalar>& l1) {
    const std::size_t n = 3;
    const context_ptr& ctx = h.ctx();
    int D = h.degree();
    polynomial l1p(ctx);
    for (std::size_t i = 0; i < n; ++i)
        if (!l1[i].is_zero()) l1p += l1[i] * polynomial::variable(ctx, i);

    // basis polynomials l1^k x_i, k = 0..D-1
    std::vector<polynomial> basis;
    std::vector<polynomial> l1pow{polynomial::constant(ctx, scalar(1))};
    for (int k = 1; k < D; ++k) l1pow.push_back(l1pow.back() * l1p);
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < D; ++k) basis.push_back(l1pow[k] * polynomial::variable(ctx, i));

    std::map<exponents, std::size_t, term_order_less> row_of;
    auto note = [&](const polynomial& p) {
        for (const auto& [e, c] : p.terms()) row_of.emplace(e, row_of.size());
    };
    note(h);
    for (const auto& b : basis) note(b);

    scalar_matrix A(row_of.size(), basis.size());
    std::vector<scalar> rhs(row_of.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& [e, v] : basis[c].terms()) A.at(row_of.at(e), c) = v;
    for (const auto& [e, v] : h.terms()) rhs[row_of.at(e)] = v;

    auto x = solve_linear(A, rhs);
    if (!x) return std::nullopt;
    std::vector<unipoly> g;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<scalar> coeffs(static_cast<std::size_t>(D));
        for (int k = 0; k < D; ++k)
            coeffs[std::size_t(k)] = (*x)[i * std::size_t(D) + std::size_t(k)];
        g.emplace_back(std::move(coeffs));
    }
    return g;
}

} // namespace

classification classify_zero_hessian(const polynomial& h) {
    const std::size_t n = h.nvars();
    if (n < 1 || n > 3)
        fail(errc::unsupported_dimension, "triangulate", "classification covers 1 <= n <= 3");
    if (!h.graded_slice(0).is_zero() || !h.graded_slice(1).is_zero())
        fail(errc::invalid_argument, "triangulate",
             "input must have no terms of degree less than two");
    polynomial det = hessian_determinant(h);
    if (!det.is_zero())
        fail(errc::not_zero_hessian, "triangulate", "Hessian determinant is nonzero");

    classification cls;
    if (h.is_zero()) {
        cls.tag = zero_hessian_class::in_one_form;
        std::vector<scalar> l1(n);
        l1[0] = scalar(1);
        cls.forms.push_back(std::move(l1));
        cls.T = transform::identity(n);
        return cls;
    }

    auto kernel = directional_kernel(h);
    const std::size_t k = kernel.size();

    if (k > 0) {
        transform T = make_degenerate_transform(h, kernel);
        std::size_t used = n - k;
        if (used == 0)
            fail(errc::internal_error, "triangulate", "nonzero polynomial with full kernel");
        cls.tag = used == 1 ? zero_hessian_class::in_one_form : zero_hessian_class::in_two_forms;
        for (std::size_t r = 0; r < used; ++r) {
            std::vector<scalar> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = T.inv().at(r, j);
            normalize_primitive(row);
            cls.forms.push_back(std::move(row));
        }
        cls.T = T;
        return cls;
    }

    // nondegenerate with det H = 0: only possible for n = 3, as the rank-1
    // family h = g1(l1) x1 + g2(l1) x2 + g3(l1) x3
    if (n != 3)
        fail(errc::internal_error, "triangulate",
             "nondegenerate input with zero Hessian determinant at n < 3");
    polynomial hbar = h.leading_form();
    int D = h.degree();
    for (const auto& l1 : rank1_l1_candidates(hbar, D, h.ctx()->field)) {
        auto family = solve_rank1_family(h, l1);
        if (!family) continue;
        cls.tag = zero_hessian_class::rank1_family;
        cls.forms.push_back(l1);
        // l4 from the top coefficients of the family
        std::vector<scalar> l4(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            if ((*family)[i].degree() == D - 1) {
                l4[i] = (*family)[i].coeffs().back();
                any = true;
            }
        }
        if (!any) fail(errc::internal_error, "triangulate", "degenerate leading family");
        cls.forms.push_back(std::move(l4));
        cls.family = std::move(*family);
        cls.T = transform_sending_forms_to_coords({l1}, n);
        return cls;
    }
    fail(errc::needs_extension, "triangulate",
         "no repeated linear factor of the leading form exists over " +
             field_name(h.ctx()->field));
}

polynomial reconstruct_classification(const classification& cls, const context_ptr& ctx) {
    const std::size_t n = ctx->vars.size();
    auto form_poly = [&](const std::vector<scalar>& l) {
        polynomial p(ctx);
        for (std::size_t i = 0; i < n; ++i)
            if (!l[i].is_zero()) p += l[i] * polynomial::variable(ctx, i);
        return p;
    };
    if (cls.tag == zero_hessian_class::rank1_family) {
        polynomial l1 = form_poly(cls.forms.at(0));
        polynomial out(ctx);
        for (std::size_t i = 0; i < cls.family.size(); ++i) {
            polynomial gi(ctx);
            polynomial l1k = polynomial::constant(ctx, scalar(1));
            for (std::size_t kk = 0; kk < cls.family[i].coeffs().size(); ++kk) {
                const scalar& c = cls.family[i].coeffs()[kk];
                if (!c.is_zero()) gi += c * l1k;
                l1k = l1k * l1;
            }
            out += gi * polynomial::variable(ctx, i);
        }
        return out;
    }
    fail(errc::invalid_argument, "triangulate",
         "reconstruction from forms applies to the rank-1 family; reduced "
         "classes reconstruct through T");
}

// --------------------------------------------------------- weight search --

namespace {

bool try_kernel_realign(const polynomial& h, const weight_fn& w, transform& T) {
    const std::size_t n = h.nvars();
    std::vector<std::vector<std::size_t>> classes;
    if (w.is_uniform()) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        classes.push_back(std::move(all));
    } else {
        std::map<mpq_class, std::vector<std::size_t>> by_weight;
        for (std::size_t i = 0; i < n; ++i) by_weight[w[i]].push_back(i);
        for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it)
            classes.push_back(it->second);
    }
    for (const auto& C : classes) {
        if (C.size() < 2) continue;
        auto basis = kernel_in_span(h, C);
        if (basis.empty()) continue;
        const std::size_t m = C.size();
        std::vector<std::vector<scalar>> in_class;
        for (const auto& v : basis) {
            std::vector<scalar> r(m);
            for (std::size_t a = 0; a < m; ++a) r[a] = v[C[a]];
            in_class.push_back(std::move(r));
        }
        scalar_matrix block = complete_columns_back(in_class, m);
        scalar_matrix T2 = scalar_matrix::identity(n);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) T2.at(C[a], C[b]) = block.at(a, b);
        polynomial moved = h.substitute_linear(T2);
        if (support_mask(moved) < support_mask(h)) {
            T = T.then(transform::make(T2));
            return true;
        }
    }
    return false;
}

// While the weights are uniform, rotate the most repeated linear factor of
// the (binary) leading part onto x1.
bool try_x1_realign(const polynomial& h, transform& T) {
    const std::size_t n = h.nvars();
    auto factors = binary_linear_factors(h, 0, 1, h.ctx()->field);
    if (factors.empty()) return false;
    unsigned maxmult = 0;
    for (const auto& f : factors) maxmult = std::max(maxmult, f.mult);
    unsigned x1mult = 0;
    for (const auto& f : factors)
        if (f.coeffs[0] == scalar(1) && f.coeffs[1].is_zero()) x1mult = f.mult;
    if (x1mult == maxmult) return false;

    std::vector<scalar> winner;
    for (const auto& f : factors) {
        if (f.mult != maxmult) continue;
        std::vector<scalar> cand = f.coeffs;
        normalize_primitive(cand);
        if (winner.empty()) {
            winner = cand;
            continue;
        }
        for (std::size_t i = 0; i < 2; ++i) {
            int c = cand[i].cmp(winner[i]);
            if (c < 0) winner = cand;
            if (c != 0) break;
        }
    }
    std::vector<scalar> row(n);
    row[0] = winner[0];
    row[1] = winner[1];
    transform T2 = transform_sending_forms_to_coords({row}, n);
    T = T.then(T2);
    return true;
}

std::vector<std::vector<mpq_class>> candidate_directions(std::size_t n, const polynomial& h) {
    std::vector<std::vector<mpq_class>> out;
    auto tail_ones = [&](std::size_t ones) {
        std::vector<mpq_class> d(n, 0);
        for (std::size_t i = n - ones; i < n; ++i) d[i] = 1;
        return d;
    };
    if (n == 2) {
        out.push_back(tail_ones(1));
        return out;
    }
    if (n == 3) {
        auto sup = h.var_support();
        if (!sup[2]) {
            if (h.degree_in_var(1) >= 2)
                out.push_back(tail_ones(1)); // raise w(x3) alone
            else
                out.push_back(tail_ones(2)); // raise w(x2) = w(x3)
        } else {
            out.push_back(tail_ones(1));
            out.push_back(tail_ones(2));
        }
        return out;
    }
    for (std::size_t ones = n - 1; ones >= 1; --ones) out.push_back(tail_ones(ones));
    return out;
}

} // namespace

adapted_weight find_adapted_weight(const polynomial& f, unsigned budget) {
    const std::size_t n = f.nvars();
    if (n < 1) fail(errc::invalid_argument, "triangulate", "need at least one variable");
    if (hessian_determinant(f).is_zero())
        fail(errc::zero_hessian_determinant, "triangulate", "det H f = 0");

    transform T = transform::identity(n);
    weight_fn w = weight_fn::uniform(n);

    for (unsigned iter = 0; iter < budget; ++iter) {
        polynomial fT = f.substitute_linear(T.mat());
        leading_part_result lead = w_leading_part(fT, w);
        if (!hessian_determinant(lead.part).is_zero()) {
            if (!w.is_positive() || !w.is_nondecreasing())
                fail(errc::internal_error, "triangulate", "weights lost their ordering");
            return {T, w, lead.part};
        }
        if (try_kernel_realign(lead.part, w, T)) continue;
        auto sup = lead.part.var_support();
        bool within_x1x2 = true;
        for (std::size_t i = 2; i < n; ++i)
            if (sup[i]) within_x1x2 = false;
        if (w.is_uniform() && within_x1x2 && try_x1_realign(lead.part, T)) continue;

        bool stepped = false;
        for (const auto& delta : candidate_directions(n, lead.part)) {
            auto s = next_critical_step(fT, w, delta);
            if (!s) continue;
            for (std::size_t i = 0; i < n; ++i) w[i] += *s * delta[i];
            stepped = true;
            break;
        }
        if (!stepped)
            fail(errc::budget_exceeded, "triangulate",
                 "weight walk is stuck: no critical step in any direction");
    }
    fail(errc::budget_exceeded, "triangulate",
         "no adapted weight found within " + std::to_string(budget) + " steps");
}

// ------------------------------------------------------------- clearing --

anti_tri_witness make_anti_tri_witness(const polynomial& f, const transform& T,
                                       witness_route route, std::optional<weight_fn> w,
                                       std::optional<polynomial> leading) {
    const std::size_t n = f.nvars();
    if (T.dim() != n) fail(errc::dimension_mismatch, "triangulate", "witness dimension mismatch");
    poly_matrix H = hessian(f.substitute_linear(T.mat()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j + 2 > n + 1 && !H.at(i, j).is_zero())
                fail(errc::internal_error, "triangulate",
                     "witness invariant violated below the anti-diagonal");

    anti_tri_witness out{T, route, std::move(w), std::move(leading), std::nullopt};
    polynomial det = hessian_determinant(f);
    if (det.is_constant() && !det.is_zero()) {
        std::vector<scalar> constants(n);
        for (std::size_t i = 0; i < n; ++i) {
            const polynomial& e = H.at(i, n - 1 - i);
            if (!e.is_constant() || e.is_zero())
                fail(errc::internal_error, "triangulate",
                     "anti-diagonal entries must be nonzero constants when det H f is");
            constants[i] = e.constant_value();
        }
        out.anti_diagonal_constants = std::move(constants);
    }
    return out;
}

anti_tri_witness clear_below_antidiagonal(const polynomial& f, const transform& T0,
                                          const weight_fn& w, const clear_options& opts) {
    const std::size_t n = f.nvars();
    if (T0.dim() != n || w.size() != n)
        fail(errc::dimension_mismatch, "triangulate", "dimension mismatch");
    if (!w.is_positive() || !w.is_nondecreasing())
        fail(errc::hypotheses_unmet, "triangulate", "weights must satisfy 0 < w1 <= ... <= wn");

    {
        polynomial fT = f.substitute_linear(T0.mat());
        leading_part_result lead = w_leading_part(fT, w);
        if (hessian_determinant(lead.part).is_zero())
            fail(errc::hypotheses_unmet, "triangulate",
                 "the w-leading part of f(Tx) has zero Hessian determinant");
        polynomial det = hessian_determinant(fT);
        if (det.is_zero() || w_leading_part(det, w).part.constant_value().is_zero())
            fail(errc::hypotheses_unmet, "triangulate",
                 "the w-leading part of det H f(Tx) has no constant term");
    }

    transform T = T0;
    const std::size_t ceil_half = (n + 1) / 2;
    long prev_potential = -1;
    for (std::size_t round = 0; round <= n * n + 1; ++round) {
        poly_matrix H = hessian(f.substitute_linear(T.mat()));
        std::size_t bi = 0, bj = 0;
        long best = -1;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= i; ++j) {
                if (i + j <= n + 1) continue;
                if (H.at(i - 1, j - 1).is_zero()) continue;
                long pot = long(n) * long(i) + long(j);
                if (pot > best) {
                    best = pot;
                    bi = i;
                    bj = j;
                }
            }
        if (best < 0)
            return make_anti_tri_witness(
                f, T, witness_route::weight_search, w,
                w_leading_part(f.substitute_linear(T.mat()), w).part);
        if (prev_potential >= 0 && best >= prev_potential)
            fail(errc::internal_error, "triangulate", "clearing potential did not decrease");
        prev_potential = best;

        std::size_t i1 = bi, j1 = bj;
        if (opts.raise_j && j1 <= ceil_half) {
            while (j1 + 1 <= std::min(i1, ceil_half) && w[j1] == w[n - i1]) ++j1;
        }

        scalar_matrix R;
        if (j1 <= ceil_half) {
            std::size_t m = i1 + j1 - n;
            scalar_matrix M =
                constant_block(H, n - j1, n - i1, m, "flag step"); // rows n+1-j1.., cols n+1-i1..
            scalar_matrix S = right_flag_complement(M);
            R = embed_block(n, S, n - i1);
        } else {
            std::size_t m = 2 * i1 - n;
            scalar_matrix M = constant_block(H, n - i1, n - i1, m, "congruence step");
            if (!M.is_symmetric() || M.determinant().is_zero())
                fail(errc::hypotheses_unmet, "triangulate",
                     "central block is not a nondegenerate quadratic form");
            scalar_matrix S = antitriangularize_congruence(M, f.ctx()->field, opts.height);
            R = embed_block(n, S, n - i1);
        }
        T = T.then(transform::make(R));
    }
    fail(errc::internal_error, "triangulate", "clearing loop did not terminate");
}

linear_normalization normalize_linear_part(const polynomial& f, const transform& T) {
    const std::size_t n = f.nvars();
    polynomial det = hessian_determinant(f);
    if (!det.is_constant() || det.is_zero())
        fail(errc::precondition_unmet, "triangulate", "det H f must be a nonzero constant");
    poly_matrix H = hessian(f.substitute_linear(T.mat()));
    if (!H.is_zero_below_antidiagonal())
        fail(errc::precondition_unmet, "triangulate", "H f(Tx) is not anti-triangular");

    scalar_matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M.at(i, j) = H.at(i, j).constant_value();

    scalar c(1);
    if (n % 2 == 1) {
        c = M.at(n / 2, n / 2);
        if (c.is_zero())
            fail(errc::internal_error, "triangulate", "middle anti-diagonal entry vanishes");
    }
    scalar_matrix L0 = anti_lower_factorize(M.scaled(c.inverse()), f.ctx()->field);
    scalar_matrix L = L0.inverse();

    scalar_matrix target = scalar_matrix::flipped_identity(n).scaled(c);
    if (!(L.transpose() * M * L == target))
        fail(errc::internal_error, "triangulate", "normalization did not reach c*J");
    transform TL = T.then(transform::make(L));
    if (!hessian(f.substitute_linear(TL.mat())).is_zero_below_antidiagonal())
        fail(errc::internal_error, "triangulate", "normalization broke anti-triangularity");
    return {transform::make(L), c};
}

// -------------------------------------------------------------- pipeline --

namespace {

transform with_last_column(const std::vector<scalar>& v, std::size_t n) {
    return transform::make(complete_columns_back({v}, n));
}

} // namespace

pipeline_result dillen_pipeline(const polynomial& f, const pipeline_options& opts) {
    const std::size_t n = f.nvars();
    if (n < 1 || n > 3)
        fail(errc::unsupported_dimension, "triangulate", "pipeline covers 1 <= n <= 3");
    polynomial det = hessian_determinant(f);
    if (!det.is_constant())
        fail(errc::non_constant_determinant, "triangulate", "det H f is not constant");

    pipeline_result result;
    const int d = f.degree();

    if (n == 1 || d <= 1) {
        result.witness = make_anti_tri_witness(f, transform::identity(n), witness_route::trivial);
        return result;
    }

    if (det.is_zero()) {
        polynomial h = f;
        h -= f.graded_slice(0);
        h -= f.graded_slice(1);
        if (h.is_zero()) {
            result.witness =
                make_anti_tri_witness(f, transform::identity(n), witness_route::trivial);
            return result;
        }
        classification cls = classify_zero_hessian(h);
        result.witness = make_anti_tri_witness(f, cls.T, witness_route::zero_hessian);
        return result;
    }

    if (d >= 3) {
        adapted_weight aw = find_adapted_weight(f, opts.budget);
        clear_options copts;
        copts.height = opts.height;
        result.witness = clear_below_antidiagonal(f, aw.T, aw.w, copts);
        return result;
    }

    // d == 2 with det in K*: a witness exists iff the quadratic part is
    // isotropic; its zero becomes the last column of T.
    quadratic_form Q = quadratic_part_form(f);
    isotropy_result iso = isotropy_search(Q, opts.height);
    if (iso.outcome == isotropy_result::kind::anisotropic) {
        result.obstruction = iso.certificate;
        return result;
    }
    if (iso.outcome == isotropy_result::kind::unknown)
        fail(errc::isotropy_undecided, "triangulate",
             "isotropy of the quadratic part undecided up to height " +
                 std::to_string(iso.height));

    transform S = with_last_column(iso.witness, n);
    anti_tri_witness wit = clear_below_antidiagonal(f, S, weight_fn::uniform(n), {});
    result.witness =
        make_anti_tri_witness(f, wit.T, witness_route::quadratic_isotropy, std::nullopt,
                              f.substitute_linear(wit.T.mat()).graded_slice(2));
    return result;
}

} // namespace hesslab
