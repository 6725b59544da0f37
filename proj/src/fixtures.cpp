#include "hesslab/fixtures.hpp"

#include "hesslab/errors.hpp"
#include "hesslab/parser.hpp"

namespace hesslab {
namespace fixtures {

polynomial gn_counterexample(std::size_t n) {
    if (n < 4 || n > 8)
        fail(errc::invalid_argument, "fixtures", "defined for 4 <= n <= 8");
    auto ctx = make_context(field_kind::Q, n, {"t"});
    std::string text = "x1*x2 + t*x1*x2^2 + (x2 + x1*x3)^3 + x1^4*(1 + x4)";
    for (std::size_t i = 5; i <= n; ++i)
        text += " + x" + std::to_string(i) + "^" + std::to_string(i + 2);
    return parse_poly(text, ctx);
}

polynomial gn_closed_form(std::size_t n) {
    if (n < 4 || n > 8)
        fail(errc::invalid_argument, "fixtures", "defined for 4 <= n <= 8");
    auto ctx = make_context(field_kind::Q, n, {"t"});
    auto factorial = [](std::size_t k) {
        mpz_class f = 1;
        for (std::size_t j = 2; j <= k; ++j) f *= long(j);
        return f;
    };
    mpq_class coeff(-factorial(n + 1) * factorial(n + 2), 450);
    coeff.canonicalize();

    polynomial x1 = polynomial::variable(ctx, 0);
    polynomial inner = polynomial::variable(ctx, 1) + x1 * polynomial::variable(ctx, 2);
    polynomial g = polynomial::constant(ctx, scalar(coeff)) * x1.pow(9) * inner;
    for (std::size_t i = 5; i <= n; ++i)
        g = g * polynomial::variable(ctx, i - 1).pow(unsigned(i));
    return g;
}

polynomial dimension_four_blocker() {
    auto ctx = make_context(field_kind::Q, 4);
    return parse_poly("(x1 + x2^2)*x3 + (x2 + (x1 + x2^2)^2)*x4", ctx);
}

quadratic_form qi_quartic_form() {
    quadratic_form Q;
    Q.field = field_kind::Qi;
    Q.gram = scalar_matrix(4, 4);
    Q.gram.at(0, 0) = scalar(1);
    Q.gram.at(1, 1) = scalar(3);
    Q.gram.at(2, 2) = scalar(5);
    Q.gram.at(3, 3) = scalar(10);
    return Q;
}

} // namespace fixtures
} // namespace hesslab
