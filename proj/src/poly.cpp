#include "hesslab/poly.hpp"

#include "hesslab/errors.hpp"

#include <algorithm>

namespace hesslab {

context_ptr make_context(field_kind field, std::size_t nvars, std::vector<std::string> params) {
    auto ctx = std::make_shared<context>();
    ctx->field = field;
    for (std::size_t i = 1; i <= nvars; ++i) ctx->vars.push_back("x" + std::to_string(i));
    ctx->params = std::move(params);
    return ctx;
}

bool term_order_less::operator()(const exponents& a, const exponents& b) const {
    unsigned long ta = 0, tb = 0;
    for (unsigned e : a) ta += e;
    for (unsigned e : b) tb += e;
    if (ta != tb) return ta < tb;
    // lex: the vector that is larger in the first differing slot is larger
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

void require_same_context(const polynomial& a, const polynomial& b, const char* where) {
    if (a.ctx() == b.ctx()) return;
    if (a.ctx() && b.ctx() && *a.ctx() == *b.ctx()) return;
    fail(errc::dimension_mismatch, "poly_core", std::string("context mismatch in ") + where);
}

polynomial polynomial::constant(context_ptr ctx, scalar c) {
    polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(exponents(p.ctx_->width(), 0), std::move(c));
    return p;
}

polynomial polynomial::variable(context_ptr ctx, std::size_t var_index) {
    if (var_index >= ctx->vars.size())
        fail(errc::index_out_of_range, "poly_core", "variable index out of range");
    polynomial p(std::move(ctx));
    exponents e(p.ctx_->width(), 0);
    e[var_index] = 1;
    p.terms_.emplace(std::move(e), scalar(1));
    return p;
}

polynomial polynomial::monomial(context_ptr ctx, exponents e, scalar c) {
    if (e.size() != ctx->width())
        fail(errc::dimension_mismatch, "poly_core", "exponent vector width mismatch");
    polynomial p(std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

scalar polynomial::constant_value() const {
    exponents zero(ctx_->width(), 0);
    return coefficient(zero);
}

scalar polynomial::coefficient(const exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? scalar(0) : it->second;
}

void polynomial::add_term(const exponents& e, const scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

polynomial polynomial::operator-() const {
    polynomial p(ctx_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

polynomial& polynomial::operator+=(const polynomial& o) {
    require_same_context(*this, o, "operator+");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

polynomial& polynomial::operator-=(const polynomial& o) {
    require_same_context(*this, o, "operator-");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

polynomial polynomial::operator*(const polynomial& o) const {
    require_same_context(*this, o, "operator*");
    polynomial p(ctx_);
    const std::size_t w = ctx_->width();
    exponents sum(w);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < w; ++i) sum[i] = ea[i] + eb[i];
            p.add_term(sum, ca * cb);
        }
    return p;
}

polynomial polynomial::scaled(const scalar& c) const {
    polynomial p(ctx_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

polynomial operator*(const scalar& c, const polynomial& p) { return p.scaled(c); }

polynomial polynomial::pow(unsigned e) const {
    polynomial acc = polynomial::constant(ctx_, scalar(1));
    polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool polynomial::operator==(const polynomial& o) const {
    require_same_context(*this, o, "operator==");
    return terms_ == o.terms_;
}

polynomial polynomial::derivative(std::size_t var_index) const {
    if (var_index >= ctx_->vars.size())
        fail(errc::index_out_of_range, "poly_core", "derivative index out of range");
    polynomial p(ctx_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        exponents d = e;
        --d[var_index];
        p.add_term(d, c * scalar(long(e[var_index])));
    }
    return p;
}

namespace {
unsigned long var_degree(const exponents& e, std::size_t nvars) {
    unsigned long t = 0;
    for (std::size_t i = 0; i < nvars; ++i) t += e[i];
    return t;
}
} // namespace

int polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, int(var_degree(e, nvars())));
    return d;
}

int polynomial::degree_in_var(std::size_t var_index) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, int(e[var_index]));
    return d;
}

int polynomial::degree_in_vars(const std::vector<std::size_t>& var_indices) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (std::size_t i : var_indices) t += int(e[i]);
        d = std::max(d, t);
    }
    return d;
}

std::vector<bool> polynomial::var_support() const {
    std::vector<bool> sup(nvars(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars(); ++i)
            if (e[i] > 0) sup[i] = true;
    return sup;
}

polynomial polynomial::graded_slice(int k) const {
    polynomial p(ctx_);
    if (k < 0) return p;
    for (const auto& [e, c] : terms_)
        if (int(var_degree(e, nvars())) == k) p.terms_.emplace(e, c);
    return p;
}

polynomial polynomial::leading_form() const {
    if (is_zero()) fail(errc::zero_polynomial, "poly_core", "leading form of zero");
    return graded_slice(degree());
}

polynomial polynomial::substitute_linear(const scalar_matrix& T) const {
    const std::size_t n = nvars();
    if (T.rows() != n || T.cols() != n)
        fail(errc::dimension_mismatch, "poly_core", "substitution matrix must be n x n");
    std::vector<polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        polynomial row(ctx_);
        for (std::size_t j = 0; j < n; ++j)
            if (!T.at(i, j).is_zero()) row += T.at(i, j) * polynomial::variable(ctx_, j);
        images.push_back(std::move(row));
    }
    return substitute_vars(images);
}

polynomial polynomial::substitute_vars(const std::vector<polynomial>& images) const {
    const std::size_t n = nvars();
    if (images.size() != n)
        fail(errc::dimension_mismatch, "poly_core", "need one image per variable");
    for (const auto& g : images) require_same_context(*this, g, "substitute_vars");

    // Cache powers of each image up to its maximal occurring exponent.
    std::vector<unsigned> max_exp(n, 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        powers[i].push_back(polynomial::constant(ctx_, scalar(1)));
        for (unsigned k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i][k - 1] * images[i]);
    }

    polynomial out(ctx_);
    const std::size_t w = ctx_->width();
    for (const auto& [e, c] : terms_) {
        exponents param_part(w, 0);
        for (std::size_t i = n; i < w; ++i) param_part[i] = e[i];
        polynomial term = polynomial::monomial(ctx_, param_part, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        out += term;
    }
    return out;
}

scalar polynomial::evaluate(const std::vector<scalar>& var_values,
                            const std::vector<scalar>& param_values) const {
    const std::size_t n = nvars();
    if (var_values.size() != n)
        fail(errc::dimension_mismatch, "poly_core", "evaluation point has wrong dimension");
    if (param_values.size() != ctx_->params.size())
        fail(errc::dimension_mismatch, "poly_core", "parameter values missing");
    scalar out(0);
    for (const auto& [e, c] : terms_) {
        scalar t = c;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i]) t *= var_values[i].pow(e[i]);
        for (std::size_t k = 0; k < param_values.size(); ++k)
            if (e[n + k]) t *= param_values[k].pow(e[n + k]);
        out += t;
    }
    return out;
}

polynomial polynomial::substitute_param(const std::string& name, const scalar& value) const {
    std::size_t k = 0;
    for (; k < ctx_->params.size(); ++k)
        if (ctx_->params[k] == name) break;
    if (k == ctx_->params.size())
        fail(errc::unknown_variable, "poly_core", "no parameter named '" + name + "'");

    auto reduced = std::make_shared<context>();
    reduced->field = ctx_->field;
    reduced->vars = ctx_->vars;
    reduced->params = ctx_->params;
    reduced->params.erase(reduced->params.begin() + long(k));

    const std::size_t n = nvars();
    polynomial out(reduced);
    for (const auto& [e, c] : terms_) {
        exponents d;
        d.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != n + k) d.push_back(e[i]);
        out.add_term(d, c * value.pow(e[n + k]));
    }
    return out;
}

std::string polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Iterate descending in the term order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < ctx_->width(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < nvars() ? ctx_->vars[i] : ctx_->params[i - nvars()];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        std::string body;
        if (mono.empty()) {
            body = negative ? cs.substr(1) : cs;
        } else if (c.is_one()) {
            body = mono;
        } else if ((-c).is_one()) {
            body = mono;
            negative = true;
        } else {
            body = (negative && c.is_rational() ? cs.substr(1) : cs) + "*" + mono;
            if (!c.is_rational()) negative = false; // complex coefficients keep their parens
        }
        if (out.empty())
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

polynomial divide_exact(const polynomial& f, const polynomial& g) {
    require_same_context(f, g, "divide_exact");
    if (g.is_zero()) fail(errc::invalid_argument, "poly_core", "division by zero polynomial");
    polynomial rem = f;
    polynomial quot(f.ctx());
    const auto& gt = *g.terms().rbegin(); // leading term of g
    const std::size_t w = f.ctx()->width();
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms().rbegin();
        exponents q(w);
        for (std::size_t i = 0; i < w; ++i) {
            if (rt.first[i] < gt.first[i])
                fail(errc::internal_error, "poly_core", "inexact polynomial division");
            q[i] = rt.first[i] - gt.first[i];
        }
        polynomial qterm = polynomial::monomial(f.ctx(), q, rt.second / gt.second);
        quot += qterm;
        rem -= qterm * g;
    }
    return quot;
}

graded_parts_result graded_parts(const polynomial& f) {
    graded_parts_result r;
    r.degree = f.degree();
    r.quadratic_part = f.graded_slice(2);
    r.linear_part = f.graded_slice(1);
    if (!f.is_zero()) r.leading = f.graded_slice(r.degree);
    else {
        r.quadratic_part = polynomial(f.ctx());
        r.linear_part = polynomial(f.ctx());
    }
    return r;
}

poly_matrix::poly_matrix(std::size_t r, std::size_t c, context_ptr ctx)
    : rows(r), cols(c), entries(r * c, polynomial(std::move(ctx))) {}

bool poly_matrix::is_zero_below_antidiagonal() const {
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (i + j + 2 > rows + 1 && !at(i, j).is_zero()) return false;
    return true;
}

std::string poly_matrix::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows; ++i) {
        out += "[";
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
        if (i + 1 < rows) out += "\n";
    }
    return out;
}

poly_map compose(const poly_map& F, const poly_map& G) {
    poly_map out;
    out.reserve(F.size());
    for (const auto& f : F) out.push_back(f.substitute_vars(G));
    return out;
}

bool is_identity_map(const poly_map& F) {
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i].ctx()->vars.size() != F.size()) return false;
        if (F[i] != polynomial::variable(F[i].ctx(), i)) return false;
    }
    return true;
}

} // namespace hesslab
