#include "hesslab/scalar.hpp"

#include "hesslab/errors.hpp"

namespace hesslab {

std::string field_name(field_kind f) { return f == field_kind::Q ? "Q" : "Qi"; }

field_kind field_from_name(const std::string& name) {
    if (name == "Q" || name == "q") return field_kind::Q;
    if (name == "Qi" || name == "qi" || name == "QI" || name == "Q(i)") return field_kind::Qi;
    fail(errc::invalid_argument, "poly_core", "unknown field '" + name + "' (expected Q or Qi)");
}

scalar& scalar::operator+=(const scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

scalar& scalar::operator-=(const scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

scalar& scalar::operator*=(const scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

scalar scalar::inverse() const {
    if (is_zero()) fail(errc::invalid_argument, "poly_core", "division by zero scalar");
    mpq_class n = norm();
    return scalar(re_ / n, -im_ / n);
}

scalar& scalar::operator/=(const scalar& o) { return *this *= o.inverse(); }

scalar scalar::pow(unsigned long e) const {
    scalar acc(1);
    scalar base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

int scalar::cmp(const scalar& o) const {
    int c = ::cmp(re_, o.re_);
    if (c != 0) return c;
    return ::cmp(im_, o.im_);
}

namespace {
std::string q_str(const mpq_class& q) { return q.get_str(); }
} // namespace

std::string scalar::str() const {
    if (im_ == 0) return q_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = q_str(im_) + "*i";
    if (re_ == 0) return imag;
    std::string out = "(" + q_str(re_);
    if (im_ > 0)
        out += "+" + imag;
    else
        out += "-" + (im_ == -1 ? std::string("i") : q_str(mpq_class(-im_)) + "*i");
    return out + ")";
}

std::optional<scalar> sqrt_in_field(const scalar& v, field_kind field) {
    if (v.is_zero()) return scalar(0);
    if (field == field_kind::Q) {
        if (!v.is_rational()) return std::nullopt;
        auto r = sqrt_exact(v.re());
        if (!r) return std::nullopt;
        return scalar(*r);
    }
    // Q(i): (c + d i)^2 = a + b i forces c^2 + d^2 = sqrt(a^2 + b^2), so the
    // norm must be a rational square, and then c^2 = (a + s)/2 must be one too.
    auto s = sqrt_exact(v.norm());
    if (!s) return std::nullopt;
    const mpq_class& a = v.re();
    const mpq_class& b = v.im();
    mpq_class c2 = (a + *s) / 2;
    auto c = sqrt_exact(c2);
    if (!c) return std::nullopt;
    if (*c != 0) {
        scalar root(*c, b / (2 * *c));
        if (root * root == v) return root;
        return std::nullopt;
    }
    mpq_class d2 = (*s - a) / 2;
    auto d = sqrt_exact(d2);
    if (!d) return std::nullopt;
    scalar root(mpq_class(0), *d);
    if (root * root == v) return root;
    return std::nullopt;
}

bool is_square_in_field(const scalar& v, field_kind field) {
    return sqrt_in_field(v, field).has_value();
}

} // namespace hesslab
