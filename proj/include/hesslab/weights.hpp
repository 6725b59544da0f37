#pragma once

#include "hesslab/matrix.hpp"
#include "hesslab/poly.hpp"

#include <optional>

namespace hesslab {

/// Weight function on the variables: one exact rational per variable,
/// extended additively to monomials.  Parameters are weightless.
class weight_fn {
public:
    weight_fn() = default;
    explicit weight_fn(std::vector<mpq_class> w) : w_(std::move(w)) {}
    static weight_fn uniform(std::size_t n, mpq_class v = 1);

    std::size_t size() const { return w_.size(); }
    const mpq_class& operator[](std::size_t i) const { return w_[i]; }
    mpq_class& operator[](std::size_t i) { return w_[i]; }
    const std::vector<mpq_class>& values() const { return w_; }

    mpq_class weight_of(const exponents& e) const;

    bool is_positive() const;
    bool is_nondecreasing() const;
    bool is_uniform() const;

    std::string str() const;
    bool operator==(const weight_fn& o) const { return w_ == o.w_; }

private:
    std::vector<mpq_class> w_;
};

struct leading_part_result {
    polynomial part;
    mpq_class value;
};

/// Terms of f of maximal weighted degree, plus that degree.
/// Throws ZeroPolynomial on the zero polynomial.
leading_part_result w_leading_part(const polynomial& f, const weight_fn& w);

/// Weighted degree w(f) alone.
mpq_class w_degree(const polynomial& f, const weight_fn& w);

/// Smallest s > 0 at which the (w + s*delta)-leading set of f acquires a term
/// outside the current leading set; nullopt when no finite s does (every
/// current leading term already maximizes the delta-slope).
std::optional<mpq_class> next_critical_step(const polynomial& f, const weight_fn& w,
                                            const std::vector<mpq_class>& delta);

/// The explicit weight choice w(x_i) = d^{i-1} for i <= n/2 + 1 and
/// d^{ceil(n/2)-1} + d^{floor(n/2)} - d^{n-i} beyond; strictly increasing with
/// constant pair sums w(x_i) + w(x_{n+1-i}).
weight_fn wchoice_weights(std::size_t n, unsigned d);

/// Check w(f(Tx)) = w(x_i) + w(x_{n+1-i}) for every i.  Preconditions (the
/// w-leading part of f(Tx) has nonzero Hessian determinant and the w-leading
/// part of det H f(Tx) has a constant term) are enforced; PreconditionUnmet
/// otherwise.
bool verify_weight_sum(const polynomial& f, const transform& T, const weight_fn& w);

} // namespace hesslab
