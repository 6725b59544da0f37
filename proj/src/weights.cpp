#include "hesslab/weights.hpp"

#include "hesslab/calculus.hpp"
#include "hesslab/errors.hpp"

namespace hesslab {

weight_fn weight_fn::uniform(std::size_t n, mpq_class v) {
    return weight_fn(std::vector<mpq_class>(n, v));
}

mpq_class weight_fn::weight_of(const exponents& e) const {
    mpq_class t = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (e[i]) t += mpq_class(long(e[i])) * w_[i];
    return t;
}

bool weight_fn::is_positive() const {
    for (const auto& v : w_)
        if (v <= 0) return false;
    return true;
}

bool weight_fn::is_nondecreasing() const {
    for (std::size_t i = 1; i < w_.size(); ++i)
        if (w_[i] < w_[i - 1]) return false;
    return true;
}

bool weight_fn::is_uniform() const {
    for (std::size_t i = 1; i < w_.size(); ++i)
        if (w_[i] != w_[0]) return false;
    return true;
}

std::string weight_fn::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) out += ", ";
        out += w_[i].get_str();
    }
    return out + ")";
}

mpq_class w_degree(const polynomial& f, const weight_fn& w) {
    if (f.is_zero()) fail(errc::zero_polynomial, "weights", "weighted degree of zero");
    bool first = true;
    mpq_class best;
    for (const auto& [e, c] : f.terms()) {
        mpq_class t = w.weight_of(e);
        if (first || t > best) {
            best = t;
            first = false;
        }
    }
    return best;
}

leading_part_result w_leading_part(const polynomial& f, const weight_fn& w) {
    if (f.is_zero()) fail(errc::zero_polynomial, "weights", "leading part of zero");
    if (w.size() != f.nvars())
        fail(errc::dimension_mismatch, "weights", "weight vector length mismatch");
    mpq_class top = w_degree(f, w);
    polynomial part(f.ctx());
    for (const auto& [e, c] : f.terms())
        if (w.weight_of(e) == top) part.add_term(e, c);
    return {std::move(part), std::move(top)};
}

std::optional<mpq_class> next_critical_step(const polynomial& f, const weight_fn& w,
                                            const std::vector<mpq_class>& delta) {
    if (f.is_zero()) fail(errc::zero_polynomial, "weights", "critical step of zero");
    if (delta.size() != f.nvars())
        fail(errc::dimension_mismatch, "weights", "direction length mismatch");
    bool nonzero = false;
    for (const auto& d : delta) {
        if (d < 0) fail(errc::invalid_argument, "weights", "direction must be componentwise >= 0");
        if (d != 0) nonzero = true;
    }
    if (!nonzero) fail(errc::invalid_argument, "weights", "direction must be nonzero");

    auto slope = [&](const exponents& e) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < delta.size(); ++i)
            if (e[i]) s += mpq_class(long(e[i])) * delta[i];
        return s;
    };

    mpq_class top = w_degree(f, w);
    // steepest slope within the current leading set
    bool first = true;
    mpq_class mu;
    for (const auto& [e, c] : f.terms()) {
        if (w.weight_of(e) != top) continue;
        mpq_class s = slope(e);
        if (first || s > mu) {
            mu = s;
            first = false;
        }
    }
    // first crossing by an outsider with a steeper slope
    std::optional<mpq_class> step;
    for (const auto& [e, c] : f.terms()) {
        mpq_class wt = w.weight_of(e);
        if (wt == top) continue;
        mpq_class s = slope(e);
        if (s <= mu) continue;
        mpq_class cross = (top - wt) / (s - mu);
        if (!step || cross < *step) step = cross;
    }
    return step;
}

weight_fn wchoice_weights(std::size_t n, unsigned d) {
    if (n < 1 || d < 2) fail(errc::invalid_argument, "weights", "need n >= 1 and d >= 2");
    auto p = [&](unsigned long e) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), d, e);
        return mpq_class(r);
    };
    const std::size_t half_up = (n + 1) / 2;  // ceil(n/2)
    const std::size_t half_dn = n / 2;        // floor(n/2)
    std::vector<mpq_class> w(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (2 * i <= n + 2) // i <= n/2 + 1
            w[i - 1] = p((unsigned long)i - 1);
        else
            w[i - 1] = p((unsigned long)half_up - 1) + p((unsigned long)half_dn) -
                       p((unsigned long)(n - i));
    }
    weight_fn out(std::move(w));
    if (!out.is_positive())
        fail(errc::internal_error, "weights", "weight choice not positive");
    for (std::size_t i = 1; i < n; ++i)
        if (!(out[i - 1] < out[i]))
            fail(errc::internal_error, "weights", "weight choice not strictly increasing");
    return out;
}

bool verify_weight_sum(const polynomial& f, const transform& T, const weight_fn& w) {
    const std::size_t n = f.nvars();
    if (T.dim() != n || w.size() != n)
        fail(errc::dimension_mismatch, "weights", "dimension mismatch");
    polynomial fT = f.substitute_linear(T.mat());
    if (fT.is_zero()) fail(errc::zero_polynomial, "weights", "f(Tx) is zero");

    leading_part_result lead = w_leading_part(fT, w);
    polynomial det_lead = hessian_determinant(lead.part);
    if (det_lead.is_zero())
        fail(errc::precondition_unmet, "weights",
             "the w-leading part of f(Tx) has zero Hessian determinant");
    polynomial det_full = hessian_determinant(fT);
    if (det_full.is_zero() ||
        w_leading_part(det_full, w).part.constant_value().is_zero())
        fail(errc::precondition_unmet, "weights",
             "the w-leading part of det H f(Tx) has no constant term");

    for (std::size_t i = 0; i < n; ++i)
        if (w[i] + w[n - 1 - i] != lead.value) return false;
    return true;
}

} // namespace hesslab
