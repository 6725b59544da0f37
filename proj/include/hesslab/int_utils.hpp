#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

namespace hesslab {

/// Exact integer helpers shared by the scalar field, root finding and the
/// descent-certificate machinery.  All results are exact; routines that could
/// require unbounded factorization carry an explicit guard and raise
/// errc::factor_guard instead of returning a wrong answer.

bool is_perfect_square(const mpz_class& n);

/// Integer square root of a perfect square; nullopt if n is not one (or < 0).
std::optional<mpz_class> sqrt_exact(const mpz_class& n);

/// Exact square root of a non-negative rational, when it exists in Q.
std::optional<mpq_class> sqrt_exact(const mpq_class& q);

/// Prime factorization of |n| by trial division up to 10^6 with a
/// Miller-Rabin-certified cofactor.  Throws factor_guard when the leftover
/// cofactor is composite (never happens at the scale this library targets).
std::map<mpz_class, unsigned> factorize(const mpz_class& n);

/// All positive divisors of |n| (n != 0), ascending.  Guarded by factorize.
std::vector<mpz_class> divisors(const mpz_class& n);

/// A square root of -1 modulo an odd prime p with p % 4 == 1.
mpz_class sqrt_minus_one_mod(const mpz_class& p);

/// Gaussian integer a + b*i with exact mpz components.
struct gaussian_int {
    mpz_class re, im;

    gaussian_int() : re(0), im(0) {}
    gaussian_int(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const gaussian_int& o) const { return re == o.re && im == o.im; }
};

gaussian_int operator+(const gaussian_int& a, const gaussian_int& b);
gaussian_int operator-(const gaussian_int& a, const gaussian_int& b);
gaussian_int operator*(const gaussian_int& a, const gaussian_int& b);
gaussian_int conj(const gaussian_int& a);
mpz_class norm(const gaussian_int& a);

/// Quotient rounding each coordinate of a/b to the nearest integer; the
/// remainder a - q*b then has norm < norm(b), so Euclid terminates.
gaussian_int div_round(const gaussian_int& a, const gaussian_int& b);

/// Euclidean gcd in Z[i], canonicalized: nonzero results have re > 0 and
/// im >= 0 (unit-normalized), gcd(0,0) = 0.
gaussian_int gauss_gcd(gaussian_int a, gaussian_int b);

/// Multiply by the unit that lands the value in the canonical quadrant
/// (re > 0, im >= 0); zero stays zero.
gaussian_int unit_canonical(const gaussian_int& a);

bool gauss_divides(const gaussian_int& d, const gaussian_int& a);

/// Gaussian-prime factorization of a nonzero value, canonical primes.
std::vector<std::pair<gaussian_int, unsigned>> gauss_factorize(const gaussian_int& a);

/// All divisors of a nonzero value up to units, canonicalized, deterministic.
std::vector<gaussian_int> gauss_divisors(const gaussian_int& a);

} // namespace hesslab
