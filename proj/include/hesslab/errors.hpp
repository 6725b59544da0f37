#pragma once

#include <stdexcept>
#include <string>

namespace hesslab {

/// Error codes, one per failure mode named in the public contracts.
enum class errc {
    // poly_core
    syntax_error,
    unknown_variable,
    dimension_mismatch,
    index_out_of_range,
    zero_polynomial,
    // calculus
    size_limit_exceeded,
    // exact_linalg
    singular,
    not_symmetric,
    not_anti_triangular,
    middle_entry_not_square,
    square_root_unavailable,
    rank_deficient,
    // weights
    invalid_argument,
    precondition_unmet,
    // triangulate
    not_zero_hessian,
    needs_extension,
    unsupported_dimension,
    empty_kernel,
    budget_exceeded,
    zero_hessian_determinant,
    non_constant_determinant,
    hypotheses_unmet,
    isotropy_undecided,
    // gradmap
    non_constant_anti_diagonal,
    degree_guard_exceeded,
    // quadform
    malformed_certificate,
    // cli / fixtures
    unknown_fixture,
    // diagnostics that must not occur on well-formed inputs
    factor_guard,
    internal_error,
};

const char* errc_name(errc code);

/// Exception carrying a module-qualified code plus a human-readable message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& module, const std::string& message)
        : std::runtime_error(module + "/" + errc_name(code) + ": " + message),
          code_(code),
          module_(module) {}

    errc code() const noexcept { return code_; }
    const std::string& module() const noexcept { return module_; }

private:
    errc code_;
    std::string module_;
};

[[noreturn]] inline void fail(errc code, const std::string& module, const std::string& message) {
    throw error(code, module, message);
}

} // namespace hesslab
