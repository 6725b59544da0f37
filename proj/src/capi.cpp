#include "hesslab.h"

#include "hesslab/calculus.hpp"
#include "hesslab/errors.hpp"
#include "hesslab/fixtures.hpp"
#include "hesslab/gradmap.hpp"
#include "hesslab/parser.hpp"
#include "hesslab/serialize.hpp"
#include "hesslab/triangulate.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace hesslab;

struct hesslab_poly {
    polynomial value;
};

namespace {

thread_local std::string g_last_error;

hesslab_status status_of(errc code) {
    switch (code) {
    case errc::syntax_error: return HESSLAB_ERR_SYNTAX;
    case errc::unknown_variable: return HESSLAB_ERR_UNKNOWN_VARIABLE;
    case errc::dimension_mismatch: return HESSLAB_ERR_DIMENSION_MISMATCH;
    case errc::index_out_of_range: return HESSLAB_ERR_INDEX_OUT_OF_RANGE;
    case errc::zero_polynomial: return HESSLAB_ERR_ZERO_POLYNOMIAL;
    case errc::size_limit_exceeded: return HESSLAB_ERR_SIZE_LIMIT_EXCEEDED;
    case errc::singular: return HESSLAB_ERR_SINGULAR;
    case errc::not_symmetric: return HESSLAB_ERR_NOT_SYMMETRIC;
    case errc::not_anti_triangular: return HESSLAB_ERR_NOT_ANTI_TRIANGULAR;
    case errc::middle_entry_not_square: return HESSLAB_ERR_MIDDLE_ENTRY_NOT_SQUARE;
    case errc::square_root_unavailable: return HESSLAB_ERR_SQUARE_ROOT_UNAVAILABLE;
    case errc::rank_deficient: return HESSLAB_ERR_RANK_DEFICIENT;
    case errc::invalid_argument: return HESSLAB_ERR_INVALID_ARGUMENT;
    case errc::precondition_unmet: return HESSLAB_ERR_PRECONDITION_UNMET;
    case errc::not_zero_hessian: return HESSLAB_ERR_NOT_ZERO_HESSIAN;
    case errc::needs_extension: return HESSLAB_ERR_NEEDS_EXTENSION;
    case errc::unsupported_dimension: return HESSLAB_ERR_UNSUPPORTED_DIMENSION;
    case errc::empty_kernel: return HESSLAB_ERR_EMPTY_KERNEL;
    case errc::budget_exceeded: return HESSLAB_ERR_BUDGET_EXCEEDED;
    case errc::zero_hessian_determinant: return HESSLAB_ERR_ZERO_HESSIAN_DETERMINANT;
    case errc::non_constant_determinant: return HESSLAB_ERR_NON_CONSTANT_DETERMINANT;
    case errc::hypotheses_unmet: return HESSLAB_ERR_HYPOTHESES_UNMET;
    case errc::isotropy_undecided: return HESSLAB_ERR_ISOTROPY_UNDECIDED;
    case errc::non_constant_anti_diagonal: return HESSLAB_ERR_NON_CONSTANT_ANTI_DIAGONAL;
    case errc::degree_guard_exceeded: return HESSLAB_ERR_DEGREE_GUARD_EXCEEDED;
    case errc::malformed_certificate: return HESSLAB_ERR_MALFORMED_CERTIFICATE;
    case errc::unknown_fixture: return HESSLAB_ERR_UNKNOWN_FIXTURE;
    default: return HESSLAB_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hesslab_status wrap(Fn&& fn) {
    try {
        return fn();
    } catch (const error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HESSLAB_ERR_INTERNAL;
    }
}

std::vector<std::string> split_csv(const char* text) {
    std::vector<std::string> out;
    if (!text || !*text) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

context_ptr context_from_args(int nvars, const char* field, const char* params) {
    if (nvars < 0 || nvars > 9)
        fail(errc::invalid_argument, "cli", "variable count must be between 0 and 9");
    return make_context(field_from_name(field ? field : "Q"), std::size_t(nvars),
                        split_csv(params));
}

// ------------------------------------------------------------- fixtures --

std::string run_gn_fixture(int n, bool& pass) {
    std::ostringstream out;
    std::size_t nn = n <= 0 ? 4 : std::size_t(n);
    polynomial f = fixtures::gn_counterexample(nn);
    polynomial det = hessian_determinant(f);
    polynomial g = fixtures::gn_closed_form(nn);
    exponents te(f.ctx()->width(), 0);
    te[nn] = 1;
    polynomial tg = polynomial::monomial(f.ctx(), te, scalar(1)) * g;
    bool closed = det == tg;
    polynomial det0 = hessian_determinant(f.substitute_param("t", scalar(0)));
    polynomial det1 = hessian_determinant(f.substitute_param("t", scalar(1)));
    bool special = det0.is_zero() && det1 == g.substitute_param("t", scalar(0));
    pass = closed && special;
    out << (closed ? "PASS" : "FAIL") << " gn-counterexample n=" << nn
        << ": det H f equals t*g with g = " << g.str() << "\n";
    out << (special ? "PASS" : "FAIL") << " gn-counterexample n=" << nn
        << ": det H (f|t=0) = 0 and det H (f|t=1) = g\n";
    return out.str();
}

std::string run_dillen4_fixture(bool& pass) {
    std::ostringstream out;
    polynomial f = fixtures::dimension_four_blocker();
    polynomial det_ff = hessian_determinant(f);
    polynomial det_cf = determinant_cofactor(hessian(f));
    bool det_ok = det_ff == det_cf && det_ff.is_constant() && !det_ff.is_zero();
    out << (det_ok ? "PASS" : "FAIL")
        << " dillen4: two determinant routes agree on the nonzero constant "
        << det_ff.str() << "\n";
    auto ctx = f.ctx();
    polynomial cubic = f.graded_slice(3);
    polynomial expected = parse_poly("x2^2*x3 + x1^2*x4", ctx);
    bool cubic_ok = cubic == expected;
    out << (cubic_ok ? "PASS" : "FAIL") << " dillen4: cubic part is x2^2*x3 + x1^2*x4\n";
    bool budget_ok = false;
    try {
        find_adapted_weight(f, 64);
    } catch (const error& e) {
        budget_ok = e.code() == errc::budget_exceeded;
    }
    out << (budget_ok ? "PASS" : "FAIL")
        << " dillen4: ordered positive weight search exhausts its budget\n";
    pass = det_ok && cubic_ok && budget_ok;
    return out.str();
}

std::string run_qi_form_fixture(bool& pass) {
    std::ostringstream out;
    quadratic_form Q = fixtures::qi_quartic_form();
    isotropy_result iso = isotropy_search(Q, 20);
    bool aniso = iso.outcome == isotropy_result::kind::anisotropic;
    out << (aniso ? "PASS" : "FAIL")
        << " qi-form: exhaustive height-20 search finds no witness and a descent "
           "certificate exists\n";
    bool replay = false, roundtrip = false;
    if (aniso) {
        replay = check_certificate(Q, *iso.certificate);
        descent_certificate back = certificate_from_json(to_json(*iso.certificate));
        roundtrip = check_certificate(Q, back);
    }
    out << (replay ? "PASS" : "FAIL") << " qi-form: certificate replays exactly\n";
    out << (roundtrip ? "PASS" : "FAIL")
        << " qi-form: certificate survives a serialization round trip\n";
    pass = aniso && replay && roundtrip;
    return out.str();
}

} // namespace

extern "C" {

const char* hesslab_last_error(void) { return g_last_error.c_str(); }

void hesslab_free_string(char* s) { std::free(s); }

hesslab_status hesslab_parse(const char* text, int nvars, const char* field,
                             const char* params, hesslab_poly** out) {
    return wrap([&]() {
        if (!text || !out) fail(errc::invalid_argument, "cli", "null argument");
        context_ptr ctx = context_from_args(nvars, field, params);
        *out = new hesslab_poly{parse_poly(text, ctx)};
        return HESSLAB_OK;
    });
}

void hesslab_poly_free(hesslab_poly* p) { delete p; }

hesslab_status hesslab_poly_format(const hesslab_poly* p, char** out) {
    return wrap([&]() {
        *out = dup_string(p->value.str());
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_hessian(const hesslab_poly* p, int as_json, char** out) {
    return wrap([&]() {
        poly_matrix H = hessian(p->value);
        *out = dup_string(as_json ? to_json(H).dump() : H.str());
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_hessian_det(const hesslab_poly* p, char** out) {
    return wrap([&]() {
        *out = dup_string(hessian_determinant(p->value).str());
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_lead_part(const hesslab_poly* p, const char* weights, int as_json,
                                 char** out) {
    return wrap([&]() {
        std::vector<mpq_class> w;
        for (const auto& s : split_csv(weights)) {
            mpq_class q(s);
            q.canonicalize();
            w.push_back(std::move(q));
        }
        leading_part_result lead = w_leading_part(p->value, weight_fn(std::move(w)));
        if (as_json) {
            nlohmann::json j{{"part", lead.part.str()}, {"value", lead.value.get_str()}};
            *out = dup_string(j.dump());
        } else {
            *out = dup_string(lead.part.str() + "\nweight: " + lead.value.get_str());
        }
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_classify(const hesslab_poly* p, int as_json, char** out) {
    return wrap([&]() {
        classification cls = classify_zero_hessian(p->value);
        nlohmann::json j = to_json(cls);
        if (as_json) {
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << j.at("tag").get<std::string>();
            os << "\nforms:";
            for (const auto& form : j.at("forms")) {
                os << " [";
                for (std::size_t i = 0; i < form.size(); ++i)
                    os << (i ? ", " : "") << form.at(i).get<std::string>();
                os << "]";
            }
            *out = dup_string(os.str());
        }
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_antitri(const hesslab_poly* p, int budget, long height, int as_json,
                               char** out) {
    return wrap([&]() {
        pipeline_options opts;
        if (budget > 0) opts.budget = unsigned(budget);
        if (height > 0) opts.height = height;
        pipeline_result res = dillen_pipeline(p->value, opts);
        if (res.witness) {
            nlohmann::json j = to_json(*res.witness);
            j["hessian"] = to_json(hessian(p->value.substitute_linear(res.witness->T.mat())));
            *out = dup_string(as_json ? j.dump() : ("witness " + j.at("case_tag").get<std::string>() +
                                                    "\nT =\n" + res.witness->T.mat().str() +
                                                    "\nH f(Tx) =\n" +
                                                    hessian(p->value.substitute_linear(
                                                                res.witness->T.mat()))
                                                        .str()));
            return HESSLAB_OK;
        }
        nlohmann::json j{{"obstruction", to_json(*res.obstruction)}};
        *out = dup_string(as_json ? j.dump()
                                  : "obstruction: quadratic part is anisotropic (descent prime " +
                                        res.obstruction->descent_prime.get_str() + ")");
        return HESSLAB_NEGATIVE;
    });
}

hesslab_status hesslab_invert(const char* const* components, size_t count, int nvars,
                              const char* field, const char* params, int as_json, char** out) {
    return wrap([&]() {
        context_ptr ctx = context_from_args(nvars, field, params);
        poly_map F;
        for (size_t i = 0; i < count; ++i) F.push_back(parse_poly(components[i], ctx));
        inverse_witness w = invert_antitriangular(F);
        if (as_json) {
            *out = dup_string(to_json(w).dump());
        } else {
            std::string s;
            for (std::size_t i = 0; i < w.G.size(); ++i)
                s += "G" + std::to_string(i + 1) + " = " + w.G[i].str() + "\n";
            *out = dup_string(s);
        }
        return HESSLAB_OK;
    });
}

hesslab_status hesslab_isotropy(const hesslab_poly* p, long height, int as_json, char** out) {
    return wrap([&]() {
        quadratic_form Q = quadratic_part_form(p->value);
        isotropy_result res = isotropy_search(Q, height > 0 ? height : 50);
        nlohmann::json j = to_json(res);
        if (as_json) {
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << j.at("outcome").get<std::string>();
            if (res.outcome == isotropy_result::kind::witness) {
                os << " (";
                for (std::size_t i = 0; i < res.witness.size(); ++i)
                    os << (i ? ", " : "") << res.witness[i].str();
                os << ")";
            } else if (res.outcome == isotropy_result::kind::anisotropic) {
                os << " (descent prime " << res.certificate->descent_prime.get_str()
                   << ", replay " << (check_certificate(Q, *res.certificate) ? "ok" : "FAILED")
                   << ")";
            } else {
                os << " (height " << res.height << ")";
            }
            *out = dup_string(os.str());
        }
        return res.outcome == isotropy_result::kind::anisotropic ? HESSLAB_NEGATIVE : HESSLAB_OK;
    });
}

hesslab_status hesslab_verify_fixture(const char* name, int n, char** report) {
    return wrap([&]() {
        if (!name) fail(errc::invalid_argument, "cli", "null fixture name");
        std::string which = name;
        bool pass = false;
        std::string text;
        if (which == "gn-counterexample")
            text = run_gn_fixture(n, pass);
        else if (which == "dillen4")
            text = run_dillen4_fixture(pass);
        else if (which == "qi-form")
            text = run_qi_form_fixture(pass);
        else
            fail(errc::unknown_fixture, "cli", "unknown fixture '" + which + "'");
        if (report) *report = dup_string(text);
        return pass ? HESSLAB_OK : HESSLAB_ERR_VERIFY_FAILED;
    });
}

unsigned hesslab_abi_version(void) { return 1; }

} // extern "C"
