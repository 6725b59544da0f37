#include "hesslab/univariate.hpp"

#include "hesslab/errors.hpp"

#include <algorithm>

namespace hesslab {

unipoly unipoly::constant(scalar v) {
    std::vector<scalar> c;
    if (!v.is_zero()) c.push_back(std::move(v));
    return unipoly(std::move(c));
}

scalar unipoly::eval(const scalar& x) const {
    scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

unipoly unipoly::operator+(const unipoly& o) const {
    std::vector<scalar> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return unipoly(std::move(r));
}

unipoly unipoly::operator-(const unipoly& o) const {
    std::vector<scalar> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return unipoly(std::move(r));
}

unipoly unipoly::operator*(const unipoly& o) const {
    if (is_zero() || o.is_zero()) return unipoly();
    std::vector<scalar> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return unipoly(std::move(r));
}

unipoly unipoly::scaled(const scalar& v) const {
    std::vector<scalar> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * v;
    return unipoly(std::move(r));
}

unipoly unipoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

unipoly unipoly::derivative() const {
    if (c_.size() <= 1) return unipoly();
    std::vector<scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * scalar(long(i));
    return unipoly(std::move(r));
}

std::pair<unipoly, unipoly> unipoly::divmod(const unipoly& d) const {
    if (d.is_zero()) fail(errc::invalid_argument, "univariate", "division by zero");
    unipoly rem = *this;
    std::vector<scalar> q(std::max<int>(0, degree() - d.degree() + 1));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        std::size_t shift = std::size_t(rem.degree() - d.degree());
        scalar f = rem.lead() / d.lead();
        q[shift] = f;
        std::vector<scalar> sub(shift + d.c_.size());
        for (std::size_t i = 0; i < d.c_.size(); ++i) sub[shift + i] = d.c_[i] * f;
        rem = rem - unipoly(std::move(sub));
    }
    return {unipoly(std::move(q)), std::move(rem)};
}

unipoly uni_gcd(unipoly a, unipoly b) {
    while (!b.is_zero()) {
        unipoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<unipoly, unsigned>> squarefree_decomposition(const unipoly& p) {
    std::vector<std::pair<unipoly, unsigned>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    unipoly f = p.monic();
    unipoly g = uni_gcd(f, f.derivative());
    unipoly w = f.divmod(g).first;
    unsigned mult = 1;
    while (w.degree() > 0) {
        unipoly y = uni_gcd(w, g);
        unipoly factor = w.divmod(y).first;
        if (factor.degree() > 0) out.emplace_back(factor.monic(), mult);
        g = g.divmod(y).first;
        w = std::move(y);
        ++mult;
    }
    return out;
}

namespace {

// Roots of a squarefree polynomial with coefficients in the field.
std::vector<scalar> squarefree_roots(const unipoly& q, field_kind field) {
    std::vector<scalar> roots;
    if (q.degree() < 1) return roots;
    if (q.degree() == 1) {
        roots.push_back(-(q[0] / q[1]));
        return roots;
    }

    // Clear rational denominators to land in Z or Z[i].
    mpz_class den = 1;
    for (const auto& c : q.coeffs()) {
        den = lcm(den, c.re().get_den());
        den = lcm(den, c.im().get_den());
    }
    std::vector<scalar> c;
    for (const auto& co : q.coeffs()) c.push_back(co * scalar(mpq_class(den)));

    const scalar& a0 = c.front();
    const scalar& ad = c.back();
    if (a0.is_zero()) fail(errc::internal_error, "univariate", "unstripped zero root");

    auto try_root = [&](const scalar& cand) {
        if (q.eval(cand).is_zero()) roots.push_back(cand);
    };

    if (field == field_kind::Q) {
        for (const auto& r : divisors(a0.re().get_num()))
            for (const auto& s : divisors(ad.re().get_num())) {
                mpq_class v(r, s);
                v.canonicalize();
                try_root(scalar(v));
                try_root(scalar(mpq_class(-v)));
            }
    } else {
        gaussian_int g0(a0.re().get_num(), a0.im().get_num());
        gaussian_int gd(ad.re().get_num(), ad.im().get_num());
        auto numerators = gauss_divisors(g0);
        auto denominators = gauss_divisors(gd);
        for (const auto& r : numerators)
            for (const auto& s : denominators) {
                scalar base = scalar(mpq_class(r.re), mpq_class(r.im)) /
                              scalar(mpq_class(s.re), mpq_class(s.im));
                scalar unit(1);
                for (int k = 0; k < 4; ++k) {
                    try_root(base * unit);
                    unit *= scalar::imaginary_unit();
                }
            }
    }
    std::sort(roots.begin(), roots.end(),
              [](const scalar& a, const scalar& b) { return a.cmp(b) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<std::pair<scalar, unsigned>> roots_in_field(const unipoly& p, field_kind field) {
    std::vector<std::pair<scalar, unsigned>> out;
    if (p.is_zero()) fail(errc::invalid_argument, "univariate", "roots of the zero polynomial");

    // strip powers of u
    unipoly f = p;
    unsigned zero_mult = 0;
    while (!f.is_zero() && f[0].is_zero()) {
        std::vector<scalar> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = unipoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult) out.emplace_back(scalar(0), zero_mult);

    for (const auto& [factor, mult] : squarefree_decomposition(f))
        for (const auto& r : squarefree_roots(factor, field)) out.emplace_back(r, mult);

    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
    return out;
}

} // namespace hesslab
