#include "hesslab/parser.hpp"

#include "hesslab/errors.hpp"

#include <cctype>

namespace hesslab {

namespace {

class parser {
public:
    parser(const std::string& text, context_ptr ctx) : text_(text), ctx_(std::move(ctx)) {}

    polynomial run() {
        polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) err("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    context_ptr ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void err(const std::string& msg) {
        fail(errc::syntax_error, "poly_core",
             msg + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    polynomial expr() {
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        else accept('+');
        polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                break;
        }
        return p;
    }

    polynomial term() {
        polynomial p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    polynomial factor() {
        polynomial base = primary();
        while (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start) err("expected a non-negative integer exponent");
            unsigned long e = std::stoul(text_.substr(start, pos_ - start));
            if (e > 64) err("exponent too large");
            base = base.pow(unsigned(e));
        }
        return base;
    }

    polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) err("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            polynomial p = expr();
            if (!accept(')')) err("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return symbol();
        err(std::string("unexpected character '") + c + "'");
    }

    polynomial number() {
        mpz_class num = integer_literal();
        if (accept('/')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                err("expected denominator");
            mpz_class den = integer_literal();
            if (den == 0) err("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return polynomial::constant(ctx_, scalar(q));
        }
        return polynomial::constant(ctx_, scalar(mpq_class(num)));
    }

    mpz_class integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start));
    }

    polynomial symbol() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "i") {
            if (ctx_->field != field_kind::Qi) {
                pos_ = start;
                err("the imaginary unit requires field Qi");
            }
            return polynomial::constant(ctx_, scalar::imaginary_unit());
        }
        for (std::size_t k = 0; k < ctx_->vars.size(); ++k)
            if (ctx_->vars[k] == name) return polynomial::variable(ctx_, k);
        for (std::size_t k = 0; k < ctx_->params.size(); ++k)
            if (ctx_->params[k] == name) {
                exponents e(ctx_->width(), 0);
                e[ctx_->vars.size() + k] = 1;
                return polynomial::monomial(ctx_, std::move(e), scalar(1));
            }
        fail(errc::unknown_variable, "poly_core",
             "unknown symbol '" + name + "' at position " + std::to_string(start));
    }
};

} // namespace

polynomial parse_poly(const std::string& text, const context_ptr& ctx) {
    return parser(text, ctx).run();
}

} // namespace hesslab
