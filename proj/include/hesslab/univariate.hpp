#pragma once

#include "hesslab/scalar.hpp"

#include <vector>

namespace hesslab {

/// Dense univariate polynomial over the scalar field; support machinery for
/// repeated-linear-factor extraction.  Coefficients ascending by degree.
class unipoly {
public:
    unipoly() = default;
    explicit unipoly(std::vector<scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static unipoly zero() { return unipoly(); }
    static unipoly constant(scalar v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const scalar& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<scalar>& coeffs() const { return c_; }
    const scalar& lead() const { return c_.back(); }

    scalar eval(const scalar& x) const;

    unipoly operator+(const unipoly& o) const;
    unipoly operator-(const unipoly& o) const;
    unipoly operator*(const unipoly& o) const;
    unipoly scaled(const scalar& v) const;
    unipoly monic() const;
    unipoly derivative() const;

    /// Euclidean division: returns (quotient, remainder).
    std::pair<unipoly, unipoly> divmod(const unipoly& d) const;

    bool operator==(const unipoly& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<scalar> c_;
};

/// Monic gcd over the field.
unipoly uni_gcd(unipoly a, unipoly b);

/// Yun squarefree decomposition: list of (factor, multiplicity) with
/// multiplicities ascending, factors monic, product of factor^mult equal to
/// the monic part of p.
std::vector<std::pair<unipoly, unsigned>> squarefree_decomposition(const unipoly& p);

/// All roots of p inside the field, with multiplicities, deterministic order.
/// Complete for the coefficient sizes this library works at (the divisor
/// enumeration is guarded, never silently wrong).
std::vector<std::pair<scalar, unsigned>> roots_in_field(const unipoly& p, field_kind field);

} // namespace hesslab
