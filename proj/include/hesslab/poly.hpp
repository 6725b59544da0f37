#pragma once

#include "hesslab/matrix.hpp"
#include "hesslab/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hesslab {

/// Variable/parameter context shared by all values of one computation.
/// Exponent vectors run over vars followed by params; parameters never
/// contribute to degree or differentiation.
struct context {
    field_kind field = field_kind::Q;
    std::vector<std::string> vars;
    std::vector<std::string> params;

    std::size_t width() const { return vars.size() + params.size(); }
    bool operator==(const context& o) const {
        return field == o.field && vars == o.vars && params == o.params;
    }
};

using context_ptr = std::shared_ptr<const context>;

/// Variables named x1..xn.
context_ptr make_context(field_kind field, std::size_t nvars,
                         std::vector<std::string> params = {});

using exponents = std::vector<unsigned>;

/// Graded lexicographic order on exponent vectors (total degree first, then
/// lex with earlier positions weighing more).  Used for canonical term
/// iteration and printing.
struct term_order_less {
    bool operator()(const exponents& a, const exponents& b) const;
};

/// Finitely supported map from exponent vectors to nonzero scalars over a
/// shared context.  Immutable in spirit: mutating operators return-by-value
/// at the API boundary; no hidden state.
class polynomial {
public:
    polynomial() = default;
    explicit polynomial(context_ptr ctx) : ctx_(std::move(ctx)) {}

    static polynomial constant(context_ptr ctx, scalar c);
    static polynomial variable(context_ptr ctx, std::size_t var_index);
    static polynomial monomial(context_ptr ctx, exponents e, scalar c);

    const context_ptr& ctx() const { return ctx_; }
    std::size_t nvars() const { return ctx_->vars.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the all-zero exponent vector).
    scalar constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<exponents, scalar, term_order_less>& terms() const { return terms_; }

    scalar coefficient(const exponents& e) const;
    void add_term(const exponents& e, const scalar& c); // maintains no-zero invariant

    polynomial operator-() const;
    polynomial& operator+=(const polynomial& o);
    polynomial& operator-=(const polynomial& o);
    polynomial operator*(const polynomial& o) const;
    polynomial scaled(const scalar& c) const;
    polynomial pow(unsigned e) const;

    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }

    bool operator==(const polynomial& o) const;
    bool operator!=(const polynomial& o) const { return !(*this == o); }

    /// Formal derivative with respect to variable var_index (0-based).
    polynomial derivative(std::size_t var_index) const;

    /// Total degree in the variables (parameters weightless); -1 for zero.
    int degree() const;
    int degree_in_var(std::size_t var_index) const;
    /// Largest combined degree over the given variable set.
    int degree_in_vars(const std::vector<std::size_t>& var_indices) const;
    /// Which variables actually occur.
    std::vector<bool> var_support() const;

    /// Sum of the terms of variable-degree exactly k.
    polynomial graded_slice(int k) const;
    /// Top graded slice; throws ZeroPolynomial on the zero polynomial.
    polynomial leading_form() const;

    /// f(Tx): substitute each variable by the corresponding row-combination.
    polynomial substitute_linear(const scalar_matrix& T) const;
    /// Substitute every variable by a polynomial image (params untouched).
    polynomial substitute_vars(const std::vector<polynomial>& images) const;
    /// Full evaluation; param_values must match the parameter list.
    scalar evaluate(const std::vector<scalar>& var_values,
                    const std::vector<scalar>& param_values = {}) const;
    /// Specialize one parameter; the result lives in a context without it.
    polynomial substitute_param(const std::string& name, const scalar& value) const;

    std::string str() const;

private:
    context_ptr ctx_;
    std::map<exponents, scalar, term_order_less> terms_;
};

polynomial operator*(const scalar& c, const polynomial& p);

/// Exact quotient f/g in the polynomial ring; the division must be exact
/// (used by fraction-free elimination, where it is by construction).
polynomial divide_exact(const polynomial& f, const polynomial& g);

struct graded_parts_result {
    int degree = -1;                    // -1 for the zero polynomial
    polynomial quadratic_part;          // degree-2 slice
    polynomial linear_part;             // degree-1 slice
    std::optional<polynomial> leading;  // absent for the zero polynomial
};

graded_parts_result graded_parts(const polynomial& f);

/// Rectangular matrix of polynomials over one context.
struct poly_matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<polynomial> entries; // row-major

    poly_matrix() = default;
    poly_matrix(std::size_t r, std::size_t c, context_ptr ctx);

    polynomial& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const polynomial& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    bool is_zero_below_antidiagonal() const;
    std::string str() const;
};

/// Polynomial map K^n -> K^n as a component list.
using poly_map = std::vector<polynomial>;

/// Component-wise composition F(G(x)).
poly_map compose(const poly_map& F, const poly_map& G);

bool is_identity_map(const poly_map& F);

void require_same_context(const polynomial& a, const polynomial& b, const char* where);

} // namespace hesslab
