#include "hesslab/int_utils.hpp"

#include "hesslab/errors.hpp"

#include <algorithm>

namespace hesslab {

bool is_perfect_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<mpz_class> sqrt_exact(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<mpq_class> sqrt_exact(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    auto num = sqrt_exact(mpz_class(q.get_num()));
    if (!num) return std::nullopt;
    auto den = sqrt_exact(mpz_class(q.get_den()));
    if (!den) return std::nullopt;
    mpq_class r(*num, *den);
    r.canonicalize();
    return r;
}

namespace {
constexpr unsigned long kTrialLimit = 1000000;
}

std::map<mpz_class, unsigned> factorize(const mpz_class& n_in) {
    std::map<mpz_class, unsigned> out;
    mpz_class n = abs(n_in);
    if (n <= 1) return out;
    for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) {
        if (mpz_cmp_ui(n.get_mpz_t(), kTrialLimit) <= 0 ||
            mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
            ++out[n];
        } else {
            fail(errc::factor_guard, "int_utils",
                 "composite cofactor " + n.get_str() + " beyond the trial-division bound");
        }
    }
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    if (n == 0) fail(errc::invalid_argument, "int_utils", "divisors of zero");
    auto fac = factorize(n);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        const size_t base = out.size();
        if (base > 100000 / (e + 1))
            fail(errc::factor_guard, "int_utils", "divisor set too large");
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    // Tonelli is overkill: for p = 1 mod 4, z = a^((p-1)/4) works for any
    // quadratic non-residue a; try small a until one hits.
    mpz_class exp = (p - 1) / 4;
    for (mpz_class a = 2; a < p; ++a) {
        mpz_class z;
        mpz_powm(z.get_mpz_t(), a.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if ((z * z) % p == p - 1) return z;
    }
    fail(errc::internal_error, "int_utils", "no sqrt(-1) mod " + p.get_str());
}

gaussian_int operator+(const gaussian_int& a, const gaussian_int& b) {
    return {a.re + b.re, a.im + b.im};
}
gaussian_int operator-(const gaussian_int& a, const gaussian_int& b) {
    return {a.re - b.re, a.im - b.im};
}
gaussian_int operator*(const gaussian_int& a, const gaussian_int& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
gaussian_int conj(const gaussian_int& a) { return {a.re, -a.im}; }
mpz_class norm(const gaussian_int& a) { return a.re * a.re + a.im * a.im; }

namespace {
mpz_class round_quotient(const mpz_class& num, const mpz_class& den) {
    // round(num/den) with den > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) ++q;
    return q;
}
} // namespace

gaussian_int div_round(const gaussian_int& a, const gaussian_int& b) {
    mpz_class nb = norm(b);
    if (nb == 0) fail(errc::invalid_argument, "int_utils", "gaussian division by zero");
    gaussian_int num = a * conj(b);
    return {round_quotient(num.re, nb), round_quotient(num.im, nb)};
}

gaussian_int unit_canonical(const gaussian_int& a) {
    gaussian_int z = a;
    // units are 1, i, -1, -i; rotate into re > 0, im >= 0
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = gaussian_int(-z.im, z.re); // multiply by i
    }
    return a; // zero
}

gaussian_int gauss_gcd(gaussian_int a, gaussian_int b) {
    while (!b.is_zero()) {
        gaussian_int q = div_round(a, b);
        gaussian_int r = a - q * b;
        a = b;
        b = r;
    }
    return unit_canonical(a);
}

bool gauss_divides(const gaussian_int& d, const gaussian_int& a) {
    mpz_class nd = norm(d);
    if (nd == 0) return a.is_zero();
    gaussian_int num = a * conj(d);
    return mpz_divisible_p(num.re.get_mpz_t(), nd.get_mpz_t()) &&
           mpz_divisible_p(num.im.get_mpz_t(), nd.get_mpz_t());
}

std::vector<std::pair<gaussian_int, unsigned>> gauss_factorize(const gaussian_int& a_in) {
    if (a_in.is_zero()) fail(errc::invalid_argument, "int_utils", "factorize zero");
    std::vector<std::pair<gaussian_int, unsigned>> out;
    gaussian_int a = a_in;
    auto divide_out = [&a](const gaussian_int& pi) {
        unsigned e = 0;
        while (gauss_divides(pi, a)) {
            gaussian_int q = div_round(a, pi);
            a = q;
            ++e;
        }
        return e;
    };
    for (const auto& [p, e_norm] : factorize(norm(a_in))) {
        (void)e_norm;
        if (p == 2) {
            gaussian_int pi(1, 1);
            if (unsigned e = divide_out(pi)) out.emplace_back(unit_canonical(pi), e);
        } else if (p % 4 == 3) {
            gaussian_int pi(p, 0);
            if (unsigned e = divide_out(pi)) out.emplace_back(unit_canonical(pi), e);
        } else {
            mpz_class z = sqrt_minus_one_mod(p);
            gaussian_int pi = gauss_gcd(gaussian_int(p, 0), gaussian_int(z, 1));
            for (gaussian_int cand : {pi, conj(pi)}) {
                cand = unit_canonical(cand);
                if (unsigned e = divide_out(cand)) out.emplace_back(cand, e);
            }
        }
    }
    return out;
}

std::vector<gaussian_int> gauss_divisors(const gaussian_int& a) {
    auto fac = gauss_factorize(a);
    std::vector<gaussian_int> out{gaussian_int(1, 0)};
    for (const auto& [pi, e] : fac) {
        const size_t base = out.size();
        if (base > 100000 / (e + 1))
            fail(errc::factor_guard, "int_utils", "gaussian divisor set too large");
        gaussian_int pk(1, 0);
        for (unsigned k = 1; k <= e; ++k) {
            pk = pk * pi;
            for (size_t i = 0; i < base; ++i) out.push_back(unit_canonical(out[i] * pk));
        }
    }
    std::sort(out.begin(), out.end(), [](const gaussian_int& x, const gaussian_int& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace hesslab
