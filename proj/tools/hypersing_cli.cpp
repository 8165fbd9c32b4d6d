// Command-line front end: single-polynomial calculators and corpus verification.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersing/report.hpp"

using namespace hypersing;
using nlohmann::ordered_json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::uint64_t height = kDefaultHeight;
    unsigned jobs = 1;
    std::string format = "table";
    unsigned qmax = 12;
    std::size_t budget = Limits{}.max_steps;

    Limits limits() const {
        Limits l;
        l.max_steps = budget;
        return l;
    }
    bool json() const { return format == "json"; }
};

struct PolyArgs {
    std::string poly;
    std::string vars;

    Poly read() const {
        std::vector<std::string> names;
        if (!vars.empty()) {
            names = VarSet::parse_list(vars).names();
        } else {
            names = collect_identifiers(poly);
            std::sort(names.begin(), names.end());
            if (names.empty()) names = {"x"};
        }
        return parse_poly(poly, VarSet(names));
    }
};

void add_poly_args(CLI::App* sub, PolyArgs& args) {
    sub->add_option("poly", args.poly, "Polynomial, e.g. \"x^2+y^3\"")->required();
    sub->add_option("--vars", args.vars, "Comma separated variable order (default: sorted identifiers)");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    return out;
}

void emit(const Globals& g, const ordered_json& doc) {
    if (g.json()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    for (const auto& [k, v] : doc.items())
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

std::string ratvec(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

int cmd_mult(const Globals& g, const PolyArgs& a) {
    Poly f = a.read();
    emit(g, {{"poly", to_string(f)}, {"mult", to_string(multiplicity(f))}});
    return 0;
}

int cmd_milnor(const Globals& g, const PolyArgs& a) {
    Poly f = a.read();
    emit(g, {{"poly", to_string(f)}, {"mu", to_string(milnor_number(f, g.limits()))}});
    return 0;
}

int cmd_theta(const Globals& g, const PolyArgs& a) {
    Poly f = a.read();
    ThetaVal t = theta(f, g.limits());
    ordered_json doc = {{"poly", to_string(f)},
                        {"theta", to_string(t.value)},
                        {"status", to_string(t.status)},
                        {"witness", ratvec(t.witness)}};
    Ideal j = jacobian_ideal(f);
    if (j.is_monomial()) doc["oracle"] = to_string(theta_oracle(j, g.qmax));
    emit(g, doc);
    return 0;
}

int cmd_exponent(const Globals& g, const PolyArgs& a) {
    Poly f = a.read();
    MinExp e = minimal_exponent(f, g.limits());
    emit(g, {{"poly", to_string(f)},
             {"exponent", to_string(e.value)},
             {"method", to_string(e.method)},
             {"exact", e.exact}});
    return 0;
}

int cmd_spectrum(const Globals& g, const PolyArgs& a) {
    Poly f = a.read();
    Spectrum s = spectrum_qh(f, g.limits());
    ordered_json values = ordered_json::array();
    for (const auto& [v, m] : s.entries())
        for (std::uint64_t k = 0; k < m; ++k) values.push_back(to_string(v));
    auto w = find_qh_weights(f);
    ordered_json doc = {{"poly", to_string(f)}, {"weights", ratvec(w->values())}, {"mu", s.total()}};
    doc["spectrum"] = g.json() ? values : ordered_json(to_string(s));
    emit(g, doc);
    return 0;
}

int cmd_section(const Globals& g, const PolyArgs& a, const std::string& inv_text, const std::string& hyper) {
    Poly f = a.read();
    auto inv = parse_section_invariant(inv_text);
    if (!inv) throw CLI::ValidationError("--invariant", "expected mu, mult, exponent or theta");
    ordered_json doc = {{"poly", to_string(f)}, {"invariant", to_string(*inv)}};
    if (!hyper.empty()) {
        Hyperplane h(parse_rational_list(hyper));
        Poly r = restrict(f, h, g.limits().max_terms);
        InvariantValue v = evaluate_invariant(r, *inv, g.limits());
        doc["hyperplane"] = to_string(h);
        doc["restriction"] = to_string(r);
        doc["value"] = to_string(v.value);
        doc["exact"] = v.exact;
    } else {
        SectionResult s = generic_section(f, *inv, Sampler(g.seed, g.height), g.limits());
        std::string hs;
        for (const auto& h : s.hyperplanes) hs += (hs.empty() ? "" : " ") + to_string(h);
        doc["hyperplanes"] = hs;
        doc["value"] = s.stable.value ? to_string(s.stable.value->value) : "unstable";
        doc["exact"] = s.stable.value && s.stable.value->exact;
        doc["seeds"] = std::to_string(s.stable.seeds[0]) + "," + std::to_string(s.stable.seeds[1]);
        doc["height"] = s.stable.height;
        doc["escalations"] = s.stable.escalations;
    }
    emit(g, doc);
    return 0;
}

struct ScanArgs {
    std::string param;
    std::string samples;
    std::string exclude;
    std::uint64_t loeser = 0;
    std::string cover;
};

int cmd_scan(const Globals& g, const PolyArgs& a, const ScanArgs& s) {
    std::optional<Family> fam;
    if (!s.param.empty()) {
        std::vector<std::string> names;
        if (!a.vars.empty()) {
            names = VarSet::parse_list(a.vars).names();
        } else {
            for (auto& id : collect_identifiers(a.poly))
                if (id != s.param) names.push_back(id);
            std::sort(names.begin(), names.end());
        }
        fam = Family::parametric(VarSet(names), s.param, a.poly);
    } else if (s.loeser > 0) {
        fam = loeser_family(a.read(), s.loeser);
    } else if (!s.cover.empty()) {
        auto dm = parse_rational_list(s.cover);
        if (dm.size() != 2 || !is_integer(dm[0]) || !is_integer(dm[1]) || sgn(dm[0]) <= 0)
            throw CLI::ValidationError("--cover", "expected d,m");
        fam = cover_family(a.read(), dm[0].get_num().get_ui(), dm[1].get_num().get_ui());
    } else {
        throw CLI::ValidationError("scan", "one of --param, --loeser or --cover is required");
    }
    std::vector<Rational> samples = s.samples.empty() ? default_samples() : parse_rational_list(s.samples);
    ScanResult r = mu_scan(*fam, samples, parse_rational_list(s.exclude), g.limits(), g.jobs);
    ordered_json doc;
    doc["family"] = to_string(fam->kind());
    doc["symbolic"] = to_string(fam->symbolic());
    ordered_json pts = ordered_json::array();
    for (const auto& p : r.points) {
        ordered_json jp = {{"t", to_string(p.t)}};
        if (p.mu) jp["mu"] = to_string(*p.mu);
        else jp["error"] = p.error;
        pts.push_back(jp);
    }
    doc["constant"] = r.constant;
    if (g.json()) {
        doc["samples"] = pts;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "family: " << doc["family"].get<std::string>() << '\n'
                  << "symbolic: " << doc["symbolic"].get<std::string>() << '\n';
        for (const auto& p : r.points)
            std::cout << "  t = " << to_string(p.t) << "  mu = " << (p.mu ? to_string(*p.mu) : "error: " + p.error)
                      << '\n';
        std::cout << (r.constant ? "CONSTANT" : "NOT CONSTANT") << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string corpus;
    std::string checks;
    std::string output;
    bool strict = false;
    bool no_timing = false;
};

int cmd_verify(const Globals& g, const VerifyArgs& v) {
    Corpus corpus;
    try {
        corpus = load_corpus(v.corpus);
    } catch (const CorpusError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    RunOptions opt;
    opt.seed = g.seed;
    opt.height = g.height;
    opt.jobs = g.jobs;
    opt.limits = g.limits();
    if (!v.checks.empty()) {
        std::stringstream ss(v.checks);
        for (std::string name; std::getline(ss, name, ',');) {
            auto k = parse_check_kind(name);
            if (!k) {
                std::cerr << "error: unknown check " << name << '\n';
                return 2;
            }
            opt.only.push_back(*k);
        }
    }
    Report report = run_corpus(corpus, opt);
    if (v.output.empty()) {
        std::cout << (g.json() ? to_json(report, !v.no_timing) : to_table(report));
    } else {
        // Report files are always JSON; the table goes to stdout.
        std::ofstream out(v.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << v.output << '\n';
            return 2;
        }
        out << to_json(report, !v.no_timing);
        if (!g.json()) std::cout << to_table(report);
    }
    return exit_code(report, v.strict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact local invariants of hypersurface singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Global seed for generic choices")->capture_default_str();
    app.add_option("--height", g.height, "Coefficient height for generic choices")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Concurrent corpus entries / scan samples")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--qmax", g.qmax, "Largest denominator tried by the theta oracle")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "Reduction steps allowed per standard basis")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    PolyArgs pa;
    std::function<int()> action;

    auto* mult = app.add_subcommand("mult", "Multiplicity at the origin");
    add_poly_args(mult, pa);
    mult->callback([&] { action = [&] { return cmd_mult(g, pa); }; });

    auto* milnor = app.add_subcommand("milnor", "Milnor number at the origin");
    add_poly_args(milnor, pa);
    milnor->callback([&] { action = [&] { return cmd_milnor(g, pa); }; });

    auto* th = app.add_subcommand("theta", "Teissier theta invariant");
    add_poly_args(th, pa);
    th->callback([&] { action = [&] { return cmd_theta(g, pa); }; });

    auto* ex = app.add_subcommand("exponent", "Minimal exponent");
    add_poly_args(ex, pa);
    ex->callback([&] { action = [&] { return cmd_exponent(g, pa); }; });

    auto* sp = app.add_subcommand("spectrum", "Spectrum of a quasi-homogeneous singularity");
    add_poly_args(sp, pa);
    sp->callback([&] { action = [&] { return cmd_spectrum(g, pa); }; });

    std::string inv = "mu", hyper;
    auto* sec = app.add_subcommand("section", "Invariant of a hyperplane section");
    add_poly_args(sec, pa);
    sec->add_option("--invariant", inv, "mu, mult, exponent or theta")->capture_default_str();
    sec->add_option("--hyperplane", hyper, "Coefficients a_1,...,a_n of sum a_i x_i = 0 (default: generic)");
    sec->callback([&] { action = [&] { return cmd_section(g, pa, inv, hyper); }; });

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "Milnor numbers along a family");
    add_poly_args(scan, pa);
    scan->add_option("--param", sa.param, "Parameter name of a parametric family");
    scan->add_option("--loeser", sa.loeser, "Loeser family f(x', t x_n) + (1-t) x_n^d with this d");
    scan->add_option("--cover", sa.cover, "Cover family with d,m, scanned along z with y = 1");
    scan->add_option("--samples", sa.samples, "Comma separated parameter values");
    scan->add_option("--exclude", sa.exclude, "Comma separated values to skip");
    scan->callback([&] { action = [&] { return cmd_scan(g, pa, sa); }; });

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Run the checks of a corpus file");
    ver->add_option("corpus", va.corpus, "Corpus file")->required();
    ver->add_option("--checks", va.checks, "Comma separated subset of checks to run");
    ver->add_option("--output", va.output, "Also write the JSON report to this file");
    ver->add_flag("--strict", va.strict, "Exit 3 when a check is inconclusive or errored");
    ver->add_flag("--no-timing", va.no_timing, "Omit elapsed_ms from JSON reports");
    ver->callback([&] { action = [&] { return cmd_verify(g, va); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
