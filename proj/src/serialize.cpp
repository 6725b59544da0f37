#include "hesslab/serialize.hpp"

#include "hesslab/errors.hpp"
#include "hesslab/parser.hpp"

namespace hesslab {

using nlohmann::json;

scalar parse_scalar(const std::string& text, field_kind field) {
    auto ctx = make_context(field, 0);
    polynomial p = parse_poly(text, ctx);
    return p.constant_value();
}

json to_json(const scalar_matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

scalar_matrix matrix_from_json(const json& j, field_kind field) {
    scalar_matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& entries = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(i, c) = parse_scalar(entries.at(i).at(c).get<std::string>(), field);
    return m;
}

json to_json(const poly_matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

json to_json(const weight_fn& w) {
    json a = json::array();
    for (std::size_t i = 0; i < w.size(); ++i) a.push_back(w[i].get_str());
    return a;
}

weight_fn weights_from_json(const json& j) {
    std::vector<mpq_class> w;
    for (const auto& v : j) {
        mpq_class q(v.get<std::string>());
        q.canonicalize();
        w.push_back(std::move(q));
    }
    return weight_fn(std::move(w));
}

std::string witness_case_tag(witness_route route) {
    switch (route) {
    case witness_route::trivial: return "trivial";
    case witness_route::zero_hessian: return "zero_hessian";
    case witness_route::weight_search: return "weight_search";
    case witness_route::quadratic_isotropy: return "quadratic_isotropy";
    }
    return "unknown";
}

namespace {
witness_route route_from_tag(const std::string& tag) {
    if (tag == "trivial") return witness_route::trivial;
    if (tag == "zero_hessian") return witness_route::zero_hessian;
    if (tag == "weight_search") return witness_route::weight_search;
    if (tag == "quadratic_isotropy") return witness_route::quadratic_isotropy;
    fail(errc::invalid_argument, "serialize", "unknown case tag '" + tag + "'");
}
} // namespace

json to_json(const anti_tri_witness& w) {
    json out{{"case_tag", witness_case_tag(w.route)},
             {"T", to_json(w.T.mat())},
             {"T_inverse", to_json(w.T.inv())}};
    out["w"] = w.w ? to_json(*w.w) : json(nullptr);
    out["leading"] = w.leading ? json(w.leading->str()) : json(nullptr);
    if (w.anti_diagonal_constants) {
        json c = json::array();
        for (const auto& s : *w.anti_diagonal_constants) c.push_back(s.str());
        out["constants"] = std::move(c);
    } else {
        out["constants"] = nullptr;
    }
    return out;
}

anti_tri_witness witness_from_json(const json& j, const context_ptr& ctx) {
    anti_tri_witness w{transform::make(matrix_from_json(j.at("T"), ctx->field)),
                       route_from_tag(j.at("case_tag").get<std::string>()), std::nullopt,
                       std::nullopt, std::nullopt};
    if (!j.at("w").is_null()) w.w = weights_from_json(j.at("w"));
    if (!j.at("leading").is_null())
        w.leading = parse_poly(j.at("leading").get<std::string>(), ctx);
    if (!j.at("constants").is_null()) {
        std::vector<scalar> cs;
        for (const auto& v : j.at("constants")) cs.push_back(parse_scalar(v.get<std::string>(), ctx->field));
        w.anti_diagonal_constants = std::move(cs);
    }
    // T_inverse must agree with the cached inverse
    scalar_matrix inv = matrix_from_json(j.at("T_inverse"), ctx->field);
    if (!(inv == w.T.inv()))
        fail(errc::invalid_argument, "serialize", "T_inverse does not invert T");
    return w;
}

json to_json(const classification& cls) {
    const char* tag = nullptr;
    switch (cls.tag) {
    case zero_hessian_class::in_one_form: tag = "InOneForm"; break;
    case zero_hessian_class::in_two_forms: tag = "InTwoForms"; break;
    case zero_hessian_class::rank1_family: tag = "Rank1Family"; break;
    case zero_hessian_class::non_degenerate: tag = "NonDegenerate"; break;
    }
    json forms = json::array();
    for (const auto& f : cls.forms) {
        json row = json::array();
        for (const auto& s : f) row.push_back(s.str());
        forms.push_back(std::move(row));
    }
    json out{{"tag", tag}, {"forms", std::move(forms)}, {"T", to_json(cls.T.mat())}};
    if (!cls.family.empty()) {
        json fam = json::array();
        for (const auto& g : cls.family) {
            json coeffs = json::array();
            for (const auto& c : g.coeffs()) coeffs.push_back(c.str());
            fam.push_back(std::move(coeffs));
        }
        out["family"] = std::move(fam);
    }
    return out;
}

namespace {
std::string gaussian_str(const gaussian_int& g) {
    std::string s = g.re.get_str();
    if (g.im == 0) return s;
    if (g.im > 0) s += "+";
    if (g.im == 1)
        s += "i";
    else if (g.im == -1)
        s += "-i";
    else
        s += g.im.get_str() + "*i";
    return s;
}

gaussian_int gaussian_from_str(const std::string& text) {
    scalar s = parse_scalar(text, field_kind::Qi);
    if (s.re().get_den() != 1 || s.im().get_den() != 1)
        fail(errc::invalid_argument, "serialize", "expected a Gaussian integer");
    return {s.re().get_num(), s.im().get_num()};
}
} // namespace

json to_json(const descent_certificate& cert) {
    json diag = json::array();
    for (const auto& d : cert.diagonal) diag.push_back(gaussian_str(d));
    json rounds = json::array();
    for (const auto& r : cert.rounds) {
        json steps = json::array();
        for (const auto& s : r.steps) {
            json forces = json::array();
            for (std::size_t i : s.forces) forces.push_back(i + 1);
            steps.push_back(json{{"modulus", s.modulus_str()}, {"forces", std::move(forces)}});
        }
        json targets = json::array();
        for (std::size_t i : r.targets) targets.push_back(i + 1);
        rounds.push_back(json{{"steps", std::move(steps)}, {"targets", std::move(targets)}});
    }
    json out{{"field", field_name(cert.field)},
             {"diagonal", std::move(diag)},
             {"descent_prime", cert.descent_prime.get_str()},
             {"rounds", std::move(rounds)}};
    out["basis_change"] = cert.basis_change ? to_json(*cert.basis_change) : json(nullptr);
    return out;
}

descent_certificate certificate_from_json(const json& j) {
    descent_certificate cert;
    cert.field = field_from_name(j.at("field").get<std::string>());
    for (const auto& d : j.at("diagonal"))
        cert.diagonal.push_back(gaussian_from_str(d.get<std::string>()));
    cert.descent_prime = mpz_class(j.at("descent_prime").get<std::string>());
    for (const auto& r : j.at("rounds")) {
        descent_round round;
        for (const auto& s : r.at("steps")) {
            mod_step step;
            std::string mod = s.at("modulus").get<std::string>();
            if (mod.find('i') != std::string::npos) {
                step.gaussian = true;
                step.pi = gaussian_from_str(mod);
            } else {
                step.modulus = mpz_class(mod);
            }
            for (const auto& f : s.at("forces"))
                step.forces.push_back(f.get<std::size_t>() - 1);
            round.steps.push_back(std::move(step));
        }
        for (const auto& t : r.at("targets")) round.targets.push_back(t.get<std::size_t>() - 1);
        cert.rounds.push_back(std::move(round));
    }
    if (j.contains("basis_change") && !j.at("basis_change").is_null())
        cert.basis_change = matrix_from_json(j.at("basis_change"), cert.field);
    return cert;
}

json to_json(const isotropy_result& r) {
    json out;
    switch (r.outcome) {
    case isotropy_result::kind::witness: {
        out["outcome"] = "witness";
        json v = json::array();
        for (const auto& s : r.witness) v.push_back(s.str());
        out["vector"] = std::move(v);
        break;
    }
    case isotropy_result::kind::anisotropic:
        out["outcome"] = "anisotropic";
        out["certificate"] = to_json(*r.certificate);
        break;
    case isotropy_result::kind::unknown:
        out["outcome"] = "unknown";
        break;
    }
    out["height"] = r.height;
    return out;
}

json to_json(const inverse_witness& w) {
    json comps = json::array();
    for (const auto& g : w.G) comps.push_back(g.str());
    json cs = json::array();
    for (const auto& c : w.constants) cs.push_back(c.str());
    return json{{"components", std::move(comps)}, {"constants", std::move(cs)}};
}

} // namespace hesslab
