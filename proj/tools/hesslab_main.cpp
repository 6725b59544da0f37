// hesslab command line: exact computations around polynomial Hessian
// determinants, exposed through the shared C API.

#include "hesslab.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct common_opts {
    int n = 2;
    std::string field = "Q";
    std::string params;
    std::string out_mode = "text";
    std::string file;
    std::vector<std::string> input;
};

void add_common(CLI::App* cmd, common_opts& o, bool needs_input = true) {
    cmd->add_option("--n", o.n, "number of variables (x1..xn)")->check(CLI::Range(1, 9));
    cmd->add_option("--field", o.field, "coefficient field: Q or Qi")
        ->check(CLI::IsMember({"Q", "Qi"}));
    cmd->add_option("--params", o.params, "comma-separated parameter names (e.g. t)");
    cmd->add_option("--out", o.out_mode, "output mode")->check(CLI::IsMember({"text", "json"}));
    if (needs_input) {
        cmd->add_option("--file", o.file, "read the input polynomial from a file");
        cmd->add_option("input", o.input, "polynomial text");
    }
}

std::string read_input(const common_opts& o, std::size_t index = 0) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) {
            std::cerr << "error: cannot read " << o.file << "\n";
            std::exit(2);
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return text;
    }
    if (index >= o.input.size()) {
        std::cerr << "error: missing input polynomial\n";
        std::exit(2);
    }
    return o.input[index];
}

struct poly_handle {
    hesslab_poly* p = nullptr;
    ~poly_handle() { hesslab_poly_free(p); }
};

struct string_out {
    char* s = nullptr;
    ~string_out() { hesslab_free_string(s); }
};

int finish(hesslab_status st, const char* text) {
    if (text) std::cout << text << "\n";
    if (st == HESSLAB_OK) return 0;
    if (st == HESSLAB_NEGATIVE || st == HESSLAB_ERR_VERIFY_FAILED) return 1;
    std::cerr << "error: " << hesslab_last_error() << "\n";
    return 2;
}

int parse_or_exit(const common_opts& o, std::size_t index, poly_handle& h) {
    hesslab_status st = hesslab_parse(read_input(o, index).c_str(), o.n, o.field.c_str(),
                                      o.params.empty() ? nullptr : o.params.c_str(), &h.p);
    if (st != HESSLAB_OK) {
        std::cerr << "error: " << hesslab_last_error() << "\n";
        std::exit(2);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for polynomials with constant Hessian determinants"};
    app.require_subcommand(1);

    common_opts hess_o, det_o, lead_o, cls_o, anti_o, inv_o, iso_o;
    std::string lead_weights;
    int anti_budget = 64;
    long anti_height = 50, iso_height = 50;

    auto* hess = app.add_subcommand("hessian", "print the Hessian matrix");
    add_common(hess, hess_o);

    auto* det = app.add_subcommand("det", "print the Hessian determinant");
    add_common(det, det_o);

    auto* lead = app.add_subcommand("leadpart", "w-leading part of the input");
    add_common(lead, lead_o);
    lead->add_option("--weights", lead_weights, "comma-separated rational weights")->required();

    auto* cls = app.add_subcommand("classify", "classify a zero-Hessian polynomial (n <= 3)");
    add_common(cls, cls_o);

    auto* anti = app.add_subcommand("antitri", "anti-triangularize the Hessian (n <= 3)");
    add_common(anti, anti_o);
    anti->add_option("--budget", anti_budget, "weight-search step budget");
    anti->add_option("--height", anti_height, "isotropy search height");

    auto* inv = app.add_subcommand("invert", "invert an anti-triangular polynomial map");
    add_common(inv, inv_o);

    auto* iso = app.add_subcommand("isotropy", "isotropy of the quadratic part");
    add_common(iso, iso_o);
    iso->add_option("--height", iso_height, "search height bound");

    auto* verify = app.add_subcommand("verify", "replay a named fixture end to end");
    std::string fixture;
    int verify_n = 4;
    bool verify_all = false;
    verify->add_option("name", fixture, "gn-counterexample | dillen4 | qi-form");
    verify->add_option("--n", verify_n, "dimension for gn-counterexample")->check(CLI::Range(4, 8));
    verify->add_flag("--all", verify_all, "run every fixture");

    CLI11_PARSE(app, argc, argv);

    auto as_json = [](const common_opts& o) { return o.out_mode == "json" ? 1 : 0; };

    if (hess->parsed()) {
        poly_handle p;
        parse_or_exit(hess_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_hessian(p.p, as_json(hess_o), &s.s);
        return finish(st, s.s);
    }
    if (det->parsed()) {
        poly_handle p;
        parse_or_exit(det_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_hessian_det(p.p, &s.s);
        return finish(st, s.s);
    }
    if (lead->parsed()) {
        poly_handle p;
        parse_or_exit(lead_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_lead_part(p.p, lead_weights.c_str(), as_json(lead_o), &s.s);
        return finish(st, s.s);
    }
    if (cls->parsed()) {
        poly_handle p;
        parse_or_exit(cls_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_classify(p.p, as_json(cls_o), &s.s);
        return finish(st, s.s);
    }
    if (anti->parsed()) {
        poly_handle p;
        parse_or_exit(anti_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_antitri(p.p, anti_budget, anti_height, as_json(anti_o), &s.s);
        return finish(st, s.s);
    }
    if (inv->parsed()) {
        if (inv_o.input.empty()) {
            std::cerr << "error: provide the map components as positional arguments\n";
            return 2;
        }
        std::vector<const char*> comps;
        for (const auto& c : inv_o.input) comps.push_back(c.c_str());
        string_out s;
        hesslab_status st =
            hesslab_invert(comps.data(), comps.size(), inv_o.n, inv_o.field.c_str(),
                           inv_o.params.empty() ? nullptr : inv_o.params.c_str(),
                           as_json(inv_o), &s.s);
        return finish(st, s.s);
    }
    if (iso->parsed()) {
        poly_handle p;
        parse_or_exit(iso_o, 0, p);
        string_out s;
        hesslab_status st = hesslab_isotropy(p.p, iso_height, as_json(iso_o), &s.s);
        return finish(st, s.s);
    }
    if (verify->parsed()) {
        std::vector<std::pair<std::string, int>> runs;
        if (verify_all) {
            runs = {{"gn-counterexample", 4}, {"gn-counterexample", 5}, {"dillen4", 0}, {"qi-form", 0}};
        } else if (!fixture.empty()) {
            runs = {{fixture, verify_n}};
        } else {
            std::cerr << "error: give a fixture name or --all\n";
            return 2;
        }
        int rc = 0;
        for (const auto& [name, n] : runs) {
            string_out s;
            hesslab_status st = hesslab_verify_fixture(name.c_str(), n, &s.s);
            if (s.s) std::cout << s.s;
            if (st == HESSLAB_ERR_VERIFY_FAILED) rc = std::max(rc, 1);
            else if (st != HESSLAB_OK) {
                std::cerr << "error: " << hesslab_last_error() << "\n";
                rc = 2;
            }
        }
        return rc;
    }
    return 2;
}
