#pragma once

#include "hesslab/int_utils.hpp"
#include "hesslab/matrix.hpp"
#include "hesslab/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hesslab {

/// Quadratic form q(v) = v^t gram v over an exact field.  By convention the
/// gram matrix of the quadratic part of a polynomial is half its constant
/// Hessian.
struct quadratic_form {
    scalar_matrix gram; // symmetric
    field_kind field = field_kind::Q;

    std::size_t dim() const { return gram.rows(); }
    scalar eval(const std::vector<scalar>& v) const;
};

quadratic_form quadratic_part_form(const polynomial& f);

/// Exact evaluation of the Hessian of f at a scalar point.
scalar_matrix hessian_at(const polynomial& f, const std::vector<scalar>& point);

/// One residue-analysis step of a descent certificate: every solution tuple
/// of the current form modulo the given modulus has the forced coordinates
/// divisible by the prime under the modulus.
struct mod_step {
    bool gaussian = false;  // true: modulus is a Gaussian prime pi
    mpz_class modulus;      // rational modulus (Q: residues mod m; Qi: pairs mod m)
    gaussian_int pi;        // Gaussian prime when gaussian
    std::vector<std::size_t> forces; // 0-based variable indices

    std::string modulus_str() const;
};

struct descent_round {
    std::vector<mod_step> steps;
    std::vector<std::size_t> targets; // indices proven divisible by the descent prime
};

/// Machine-checkable anisotropy certificate for a diagonal form: a sequence
/// of rounds, each forcing a set of coordinates of a hypothetical primitive
/// zero to be divisible by the descent prime, until all coordinates are
/// covered, contradicting primitivity.
struct descent_certificate {
    field_kind field = field_kind::Q;
    std::vector<gaussian_int> diagonal; // integral, content 1
    mpz_class descent_prime;
    std::vector<descent_round> rounds;
    /// When the certified diagonal came from a congruence S^t M S of a
    /// non-diagonal gram, S is recorded so the reduction can be replayed.
    std::optional<scalar_matrix> basis_change;
};

struct isotropy_result {
    enum class kind { witness, anisotropic, unknown };
    kind outcome = kind::unknown;
    std::vector<scalar> witness;                  // primitive, canonical sign
    std::optional<descent_certificate> certificate;
    long height = 0;
};

/// Exhaustive search over primitive integer (or Gaussian-integer) vectors of
/// coordinate height <= height; Witness if one nulls the form, otherwise an
/// attempted descent certificate, otherwise Unknown(height).
isotropy_result isotropy_search(const quadratic_form& Q, long height);

/// Replay a certificate against a form: recompute every forced set by residue
/// enumeration, check the declared forcings, the descent bookkeeping and the
/// primitivity contradiction.  Structurally broken certificates raise
/// MalformedCertificate; mathematically wrong ones return false.
bool check_certificate(const quadratic_form& Q, const descent_certificate& cert);

enum class harness_verdict { degree_two_confirmed, hypothesis_fails, counterexample_candidate };

struct harness_result {
    harness_verdict verdict;
    std::string detail;
};

/// Check det H f nonzero constant and anisotropy of the quadratic part of
/// f(x+lambda); both holding forces deg f = 2 (anything else at deg > 2 would
/// be a counterexample candidate and must never occur).
harness_result definite_harness(const polynomial& f, const std::vector<scalar>& lambda,
                                long height = 50);

} // namespace hesslab
