// Command-line surface: parse polynomials, generator words, and module
// specs; run actions, verification suites, orbit explorations, parameter
// extraction, and isomorphism checks.
//
// Exit codes: 0 success / property holds; 1 property fails; 2 parse error;
// 3 domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "bkm/classify.hpp"
#include "bkm/jsonio.hpp"
#include "bkm/parse.hpp"
#include "bkm/structure.hpp"
#include "bkm/suites.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool as_json = false;
    std::string module_spec;
    std::string module_spec_b;
    std::string word_text;
    std::string poly_text;
    std::string elem_a, elem_b;
    std::string suite;
    std::string restrict_to;
    std::string generator_text;
    std::string gbar_text;
    std::string box_text = "8x8";
    long long index_range = 3;
    long long trace_range = 5;
    unsigned level = 0;
    unsigned trials = 25;
    unsigned tuples = 5;
    unsigned max_deg = 5;
    std::uint64_t seed = 42;
};

bkm::DegreeBox parse_box(const std::string& text) {
    auto x = text.find('x');
    if (x == std::string::npos) throw bkm::ParseError(0, "box of the form JxK");
    try {
        return {static_cast<unsigned>(std::stoul(text.substr(0, x))),
                static_cast<unsigned>(std::stoul(text.substr(x + 1)))};
    } catch (const std::exception&) {
        throw bkm::ParseError(0, "box of the form JxK");
    }
}

void print_result(const Options& opt, const json& j, const std::string& pretty) {
    if (opt.as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << pretty << "\n";
}

int run_apply(const Options& opt) {
    bkm::PhiParams params = bkm::parse_module_spec(opt.module_spec);
    auto word = bkm::parse_word(opt.word_text);
    bkm::BiPoly f = bkm::parse_poly(opt.poly_text);
    bkm::BiPoly result = bkm::act_word(params, word, f);
    print_result(opt, {{"result", bkm::poly_to_json(result)}}, result.str());
    return 0;
}

int run_bracket(const Options& opt) {
    bkm::AlgebraElement a = bkm::parse_algebra_element(opt.elem_a);
    bkm::AlgebraElement b = bkm::parse_algebra_element(opt.elem_b);
    bkm::AlgebraElement r = bkm::bracket(a, b);
    print_result(opt, {{"result", bkm::element_to_json(r)}}, r.str());
    return 0;
}

int run_verify(const Options& opt) {
    bkm::SuiteResult r;
    if (opt.suite == "brackets")
        r = bkm::suites::brackets(opt.seed, opt.index_range, opt.tuples, opt.trials, opt.max_deg);
    else if (opt.suite == "jacobi")
        r = bkm::suites::jacobi(opt.seed, opt.index_range, 2 * opt.index_range, opt.trials);
    else if (opt.suite == "lemma")
        r = bkm::suites::lemma_identities(opt.seed, 4, opt.index_range, opt.trials, opt.max_deg);
    else if (opt.suite == "claims")
        r = bkm::suites::claims(opt.seed, opt.tuples, opt.trace_range);
    else if (opt.suite == "roundtrips")
        r = bkm::suites::roundtrips(opt.seed, opt.trials, opt.trials);
    else if (opt.suite == "orbit")
        r = bkm::suites::orbit_irreducibility(opt.seed, opt.index_range, parse_box(opt.box_text),
                                              opt.tuples);
    else if (opt.suite == "quotient")
        r = bkm::suites::quotient_layers(opt.seed, 3, opt.index_range, opt.trials);
    else if (opt.suite == "restriction")
        r = bkm::suites::bms_restriction(opt.seed, opt.index_range, parse_box(opt.box_text), opt.tuples);
    else if (opt.suite == "iso")
        r = bkm::suites::isomorphism(opt.seed, opt.tuples);
    else if (opt.suite == "parse")
        r = bkm::suites::parse_roundtrip(opt.seed, opt.trials);
    else
        throw bkm::DomainError("unknown suite: " + opt.suite);
    json j = {{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    std::string pretty = "suite " + r.name + ": " + (r.pass ? "pass" : "FAIL");
    if (!r.pass) pretty += " (" + r.detail + ")";
    print_result(opt, j, pretty);
    return r.pass ? 0 : 1;
}

int run_orbit(const Options& opt) {
    bkm::PhiParams params = bkm::parse_module_spec(opt.module_spec);
    bkm::BiPoly start = bkm::parse_poly(opt.poly_text);
    std::optional<bkm::Subalgebra> restrict_to;
    if (!opt.restrict_to.empty()) restrict_to = bkm::subalgebra_from_name(opt.restrict_to);
    bkm::OrbitReport report =
        bkm::orbit_closure(params, start, opt.index_range, parse_box(opt.box_text), restrict_to);
    std::string pretty = "basis_size=" + std::to_string(report.basis_size) +
                         " contains_one=" + (report.contains_one ? "true" : "false") +
                         " truncated=" + (report.truncated ? "true" : "false");
    print_result(opt, bkm::orbit_report_to_json(report), pretty);
    return 0;
}

int run_extract(const Options& opt) {
    bkm::PhiParams params = bkm::parse_module_spec(opt.module_spec);
    bkm::PhiParams recovered = bkm::extract_params(bkm::oracle_of(params));
    print_result(opt, {{"params", bkm::params_to_json(recovered)}}, recovered.str());
    return 0;
}

int run_iso(const Options& opt) {
    bkm::PhiParams a = bkm::parse_module_spec(opt.module_spec);
    bkm::PhiParams b = bkm::parse_module_spec(opt.module_spec_b);
    bool iso = bkm::iso_check(a, b);
    print_result(opt, {{"isomorphic", iso}}, iso ? "true" : "false");
    return iso ? 0 : 1;
}

int run_quotient(const Options& opt) {
    bkm::PhiParams params = bkm::parse_module_spec(opt.module_spec);
    bkm::QuotientLevel level{opt.level};
    std::size_t pos = 0;
    bkm::Generator g = bkm::parse_generator(opt.generator_text, pos);
    bkm::BiPoly gbar = bkm::parse_poly(opt.gbar_text);
    bkm::BiPoly result = bkm::quotient_act(params, level, g, gbar);
    bool irr = bkm::quotient_irreducible(params, level);
    json j = {{"result", bkm::poly_to_json(result)}, {"irreducible", irr}};
    print_result(opt, j, result.str() + "  (layer irreducible: " + (irr ? "true" : "false") + ")");
    return 0;
}

int run_trace(const Options& opt) {
    bkm::PhiParams params = bkm::parse_module_spec(opt.module_spec);
    bkm::ActionTrace trace = bkm::action_trace(params, opt.trace_range);
    bkm::ClaimReport report = bkm::verify_claims(trace, params);
    json checks = json::array();
    std::string pretty;
    for (long long m = -opt.trace_range; m <= opt.trace_range; ++m)
        pretty += "a[" + std::to_string(m) + "] = " + trace.a.at(m).str() + "    b[" + std::to_string(m) +
                  "] = " + trace.b.at(m).str() + "\n";
    for (const auto& e : report.entries) {
        checks.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
        pretty += std::string(e.pass ? "pass" : "FAIL") + "  " + e.name +
                  (e.detail.empty() ? "" : " (" + e.detail + ")") + "\n";
    }
    json ja = json::array(), jb = json::array();
    for (long long m = -opt.trace_range; m <= opt.trace_range; ++m) {
        ja.push_back({{"m", m}, {"value", bkm::poly_to_json(trace.a.at(m))}});
        jb.push_back({{"m", m}, {"value", bkm::poly_to_json(trace.b.at(m))}});
    }
    if (!pretty.empty()) pretty.pop_back();
    print_result(opt, {{"a", ja}, {"b", jb}, {"checks", checks}}, pretty);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation for the BMS-Kac-Moody algebra and its rank-one modules"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit machine-readable JSON");

    auto* apply = app.add_subcommand("apply", "apply a generator word to a polynomial (rightmost first)");
    apply->add_option("--module", opt.module_spec, "module spec phi(lambda=..,alpha=..,beta=..,rho=..,h=..)")
        ->required();
    apply->add_option("--word", opt.word_text, "generator word, e.g. \"L[1] M[-1]\"")->required();
    apply->add_option("--poly", opt.poly_text, "polynomial in s, t")->required();

    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two algebra elements");
    bracket->add_option("--a", opt.elem_a, "left element, e.g. \"L[2]\" or \"2*L[0] + M[1]\"")->required();
    bracket->add_option("--b", opt.elem_b, "right element")->required();

    auto* verify = app.add_subcommand("verify", "run a property suite (exit 0 pass, 1 fail)");
    verify
        ->add_option("--suite", opt.suite,
                     "one of: brackets, jacobi, lemma, claims, roundtrips, orbit, quotient, restriction, "
                     "iso, parse")
        ->required();
    verify->add_option("--index-range", opt.index_range, "generator index bound");
    verify->add_option("--trials", opt.trials, "random trials");
    verify->add_option("--tuples", opt.tuples, "seeded parameter tuples");
    verify->add_option("--max-deg", opt.max_deg, "max degree of random polynomials");
    verify->add_option("--seed", opt.seed, "64-bit seed");

    auto* orbit = app.add_subcommand("orbit", "submodule-orbit closure from a start vector");
    orbit->add_option("--module", opt.module_spec)->required();
    orbit->add_option("--start", opt.poly_text, "start polynomial")->required();
    orbit->add_option("--index-range", opt.index_range, "apply generators with |m| <= this");
    orbit->add_option("--box", opt.box_text, "degree box JxK");
    orbit->add_option("--restrict", opt.restrict_to, "subalgebra: witt, hv_i, hv_s, bms, ideal_si");

    auto* extract = app.add_subcommand("extract", "recover the parameter tuple from module actions");
    extract->add_option("--module", opt.module_spec)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism check (exit 0 iff isomorphic)");
    iso->add_option("--a", opt.module_spec)->required();
    iso->add_option("--b", opt.module_spec_b)->required();

    auto* quotient = app.add_subcommand("quotient", "induced action on a filtration layer (alpha=beta=0)");
    quotient->add_option("--module", opt.module_spec)->required();
    quotient->add_option("--level", opt.level, "layer index i");
    quotient->add_option("--generator", opt.generator_text, "generator token, e.g. L[1]")->required();
    quotient->add_option("--gbar", opt.gbar_text, "coefficient polynomial g(s)")->required();

    auto* trace = app.add_subcommand("trace", "classification traces a_m, b_m and claim checks");
    trace->add_option("--module", opt.module_spec)->required();
    trace->add_option("--range", opt.trace_range, "trace range M");

    CLI11_PARSE(app, argc, argv);

    try {
        if (apply->parsed()) return run_apply(opt);
        if (bracket->parsed()) return run_bracket(opt);
        if (verify->parsed()) return run_verify(opt);
        if (orbit->parsed()) return run_orbit(opt);
        if (extract->parsed()) return run_extract(opt);
        if (iso->parsed()) return run_iso(opt);
        if (quotient->parsed()) return run_quotient(opt);
        if (trace->parsed()) return run_trace(opt);
    } catch (const bkm::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const bkm::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}
