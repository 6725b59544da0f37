#pragma once

#include "hesslab/errors.hpp"
#include "hesslab/int_utils.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hesslab {

/// Coefficient field of a computation.  Q is the prime field; Qi adjoins the
/// imaginary unit.  Values themselves are field-agnostic Gaussian rationals;
/// a Q-context simply never produces a nonzero imaginary part.
enum class field_kind { Q, Qi };

std::string field_name(field_kind f);
field_kind field_from_name(const std::string& name);

/// Exact element of Q(i): re + im*i with canonical mpq components.
/// Arithmetic never rounds.
class scalar {
public:
    scalar() : re_(0), im_(0) {}
    scalar(long v) : re_(v), im_(0) {}
    scalar(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static scalar imaginary_unit() { return scalar(mpq_class(0), mpq_class(1)); }
    static scalar from_fraction(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return scalar(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

    scalar operator-() const { return scalar(-re_, -im_); }
    scalar conj() const { return scalar(re_, -im_); }

    /// re^2 + im^2, a non-negative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    scalar& operator+=(const scalar& o);
    scalar& operator-=(const scalar& o);
    scalar& operator*=(const scalar& o);
    scalar& operator/=(const scalar& o);

    friend scalar operator+(scalar a, const scalar& b) { return a += b; }
    friend scalar operator-(scalar a, const scalar& b) { return a -= b; }
    friend scalar operator*(scalar a, const scalar& b) { return a *= b; }
    friend scalar operator/(scalar a, const scalar& b) { return a /= b; }

    bool operator==(const scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const scalar& o) const { return !(*this == o); }

    scalar inverse() const;
    scalar pow(unsigned long e) const;

    /// Total order used only for deterministic tie-breaking (not algebraic).
    int cmp(const scalar& o) const;

    /// Canonical text: "3", "-3/2", "i", "2*i", "(1+1/2*i)".  The mixed form
    /// is parenthesized so it can be re-read as a single factor.
    std::string str() const;

private:
    mpq_class re_, im_;
};

/// Square root inside the given field, when one exists there.  Over Q this is
/// the rational square root; over Q(i) the Gaussian one (not every element of
/// Q(i) is a square: 2 is not).
std::optional<scalar> sqrt_in_field(const scalar& v, field_kind field);

bool is_square_in_field(const scalar& v, field_kind field);

} // namespace hesslab
