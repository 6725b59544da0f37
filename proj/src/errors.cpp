#include "hesslab/errors.hpp"

namespace hesslab {

const char* errc_name(errc code) {
    switch (code) {
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::singular: return "Singular";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::not_anti_triangular: return "NotAntiTriangular";
    case errc::middle_entry_not_square: return "MiddleEntryNotSquare";
    case errc::square_root_unavailable: return "SquareRootUnavailable";
    case errc::rank_deficient: return "RankDeficient";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::precondition_unmet: return "PreconditionUnmet";
    case errc::not_zero_hessian: return "NotZeroHessian";
    case errc::needs_extension: return "NeedsExtension";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::empty_kernel: return "EmptyKernel";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::zero_hessian_determinant: return "ZeroHessianDeterminant";
    case errc::non_constant_determinant: return "NonConstantDeterminant";
    case errc::hypotheses_unmet: return "HypothesesUnmet";
    case errc::isotropy_undecided: return "IsotropyUndecided";
    case errc::non_constant_anti_diagonal: return "NonConstantAntiDiagonal";
    case errc::degree_guard_exceeded: return "DegreeGuardExceeded";
    case errc::malformed_certificate: return "MalformedCertificate";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::factor_guard: return "FactorGuard";
    case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

} // namespace hesslab
