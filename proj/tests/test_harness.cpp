#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "hypersing/report.hpp"

using namespace hypersing;

namespace {

const VarSet xy = VarSet::parse_list("x,y");
const VarSet xyz = VarSet::parse_list("x,y,z");

Poly P(const char* s, const VarSet& v = xyz) { return parse_poly(s, v); }

Rational R(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Quantity Q(Rational v, bool exact = true) { return Quantity{ExtRat(std::move(v)), exact}; }

std::string field(const CheckResult& r, const std::string& key) {
    for (const auto& [k, v] : r.witness)
        if (k == key) return v;
    return "<missing>";
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    auto p = std::filesystem::temp_directory_path() / ("hypersing_test_" + name);
    std::ofstream(p) << text;
    return p;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(HYPERSING_CLI) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("verdict rules") {
    // 31/30 >= 5/6 + 1/5 with equality.
    CHECK(teissier_verdict(Q(R(31, 30)), Q(R(5, 6)), Q(R(4))) == Verdict::pass);
    CHECK(teissier_verdict(Q(R(1)), Q(R(5, 6)), Q(R(4))) == Verdict::fail);
    CHECK(teissier_verdict(Q(R(1), false), Q(R(5, 6)), Q(R(4))) == Verdict::inconclusive);
    CHECK(chain_verdict(Q(R(5, 6)), {Q(R(2)), Q(R(1))}) == Verdict::pass);
    CHECK(chain_verdict(Q(R(1, 2)), {Q(R(2)), Q(R(1))}) == Verdict::fail);
    CHECK(upper_bound_verdict(Q(R(5, 6)), Q(R(31, 30)), 2) == Verdict::pass);
    CHECK(upper_bound_verdict(Q(R(1, 10)), Q(R(31, 30)), 2) == Verdict::fail);
    CHECK(upper_bound_verdict(Q(R(1, 10), false), Q(R(31, 30)), 2) == Verdict::inconclusive);
}

TEST_CASE("an inexact theta never produces FAIL") {
    // A theta lower bound makes the right side larger; holding a fortiori is a
    // PASS, failing is inconclusive.
    CHECK(teissier_verdict(Q(R(31, 30)), Q(R(5, 6)), Q(R(4), false)) == Verdict::pass);
    CHECK(teissier_verdict(Q(R(31, 30)), Q(R(5, 6)), Q(R(1), false)) == Verdict::inconclusive);
    CHECK(chain_verdict(Q(R(5, 6)), {Q(R(1), false), Q(R(1))}) == Verdict::inconclusive);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(1, 40), den(1, 12);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 2000; ++i) {
        Quantity a = Q(R(num(rng), den(rng)), coin(rng));
        Quantity b = Q(R(num(rng), den(rng)), coin(rng));
        Quantity t = Q(R(num(rng), den(rng)), coin(rng));
        const bool all_exact = a.exact && b.exact && t.exact;
        if (!all_exact) {
            CHECK(teissier_verdict(a, b, t) != Verdict::fail);
            CHECK(chain_verdict(a, {b, t}) != Verdict::fail);
        }
        if (!a.exact || !b.exact) CHECK(upper_bound_verdict(a, b, 1 + i % 5) != Verdict::fail);
        if (!t.exact && a.exact && b.exact) {
            // Replacing the bound by anything at least as large keeps PASS.
            Quantity bigger = Q(t.value.value() + R(num(rng), den(rng)), true);
            if (teissier_verdict(a, b, t) == Verdict::pass) CHECK(teissier_verdict(a, b, bigger) == Verdict::pass);
        }
    }
}

TEST_CASE("Teissier check examples") {
    Sampler s(1);
    for (unsigned a = 2; a <= 5; ++a)
        for (unsigned b = a; b <= 6; ++b) {
            Poly f(xy);
            f.add_term(Exponent{a, 0}, Rational(1));
            f.add_term(Exponent{0, b}, Rational(1));
            CheckResult r = check_teissier(f, std::nullopt, s);
            CHECK(r.verdict == Verdict::pass);
            CHECK(field(r, "equality") == "true");
        }
    CheckResult z = check_teissier(P("x^2+y^3+z^5"), Hyperplane::coordinate(3, 2), s);
    CHECK(z.verdict == Verdict::pass);
    CHECK(field(z, "equality") == "true");
    CHECK(field(z, "theta") == "4");
    CHECK_THROWS_AS(check_teissier(P("x+y^2", xy), std::nullopt, s), DomainError);
}

TEST_CASE("chain, upper bound and lct checks") {
    Sampler s(2);
    CheckResult a = check_corollary_chain(P("x^2+y^3", xy), s);
    CHECK(a.verdict == Verdict::pass);
    CHECK(field(a, "sum") == "5/6");
    CHECK(field(a, "equality") == "true");
    CHECK(check_corollary_chain(P("x^2+y^2", xy), s).verdict == Verdict::pass);
    CheckResult b = check_corollary_chain(P("x^2+y^3+z^5"), s);
    CHECK(b.verdict == Verdict::pass);
    CHECK(field(b, "sum") == "31/30");

    CheckResult u = check_upper_bound(P("x^2+y^3+z^5"), s);
    CHECK(u.verdict == Verdict::pass);
    CHECK(field(u, "alpha_section") == "5/6");
    CHECK(field(u, "rhs") == "8/15");
    CHECK(check_upper_bound(P("x^2+y^3", xy), s).verdict == Verdict::pass);
    CHECK(check_upper_bound(P("x^3+y^3+z^3"), s).verdict != Verdict::fail);

    CHECK(check_lct_relation(P("x^2+y^3", xy), true).verdict == Verdict::pass);
    CHECK(check_lct_relation(P("x^2+y^2", xy), true).verdict == Verdict::pass);
    CHECK(check_lct_relation(P("x^2+y^3+z^5"), true).verdict == Verdict::pass);
    CHECK(check_lct_relation(P("x^2+y^3", xy), false).verdict == Verdict::inconclusive);
}

TEST_CASE("Milnor chain") {
    Sampler s(3);
    CHECK(check_milnor_chain(P("x^2+y^3+z^5"), s).verdict == Verdict::pass);
    CHECK(check_milnor_chain(P("x^2+y^3", xy), s).verdict == Verdict::pass);
    CheckResult c = check_milnor_chain(P("x^3+y^3+z^3"), s);
    CHECK(c.verdict == Verdict::pass);
    CHECK(field(c, "target") == "8");
    CHECK(field(c, "d") == "3");
}

TEST_CASE("family checks") {
    Sampler s(4);
    Family cubic = Family::parametric(xyz, "t", "x^3+y^3+z^3+t*x*y*z");
    CHECK(check_spectrum_family(cubic, {R(0), R(1), R(2), R(-1)}, {}, s).verdict == Verdict::pass);
    CHECK(check_mu_constant(cubic, {R(0), R(1), R(2), R(-1)}, {}).verdict == Verdict::pass);
    CHECK(check_mu_constant(cubic, {R(-3), R(1)}, {}).verdict == Verdict::fail);
    CHECK(check_mu_constant(cubic, {R(-3), R(1)}, {R(-3)}).verdict == Verdict::pass);

    Family quartic = Family::parametric(xy, "t", "x^4+y^4+t*x^2*y^2");
    CHECK(check_spectrum_family(quartic, {R(0), R(1)}, {}, s).verdict == Verdict::pass);
    Family scaled = Family::parametric(xy, "t", "t*x^2+t*y^2");
    CHECK(check_spectrum_family(scaled, {R(1), R(2)}, {}, s).verdict == Verdict::pass);
    // Not quasi-homogeneous at t != 0.
    Family mixed = Family::parametric(xy, "t", "x^2+y^3+t*x*y");
    CHECK(check_spectrum_family(mixed, {R(1), R(2)}, {}, s).verdict == Verdict::inconclusive);
}

TEST_CASE("expectations") {
    Expectations e;
    e.mu = ExtNat(8);
    e.theta = R(4);
    e.exponent = ExtRat(R(31, 30));
    CHECK(check_expectations(P("x^2+y^3+z^5"), e).verdict == Verdict::pass);
    e.mu = ExtNat(7);
    CHECK(check_expectations(P("x^2+y^3+z^5"), e).verdict == Verdict::fail);
}

TEST_CASE("run_check turns precondition failures into errors") {
    CorpusEntry smooth = make_entry("smooth", {"x", "y"}, "x + y^2", {CheckKind::teissier});
    CheckResult r = run_check(smooth, CheckKind::teissier, Sampler(0));
    CHECK(r.verdict == Verdict::error);
    CHECK(r.message.find("isolated singularity required") != std::string::npos);
}

TEST_CASE("corpus validation") {
    CHECK(parse_corpus("{\"entries\": []}").entries.empty());
    CHECK(parse_corpus("  \n").entries.empty());
    const char* good = R"({"name": "t", "entries": [
        {"name": "a2", "poly": "x^2+y^3", "checks": ["teissier"]},
        {"name": "cubic", "poly": "x^3+y^3+z^3+t*x*y*z", "checks": ["mu_constant"],
         "params": {"param": "t", "samples": [0, 1, "1/2"], "exclusions": [-3]}}]})";
    Corpus c = parse_corpus(good);
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].vars.names() == std::vector<std::string>{"x", "y"});
    CHECK(c.entries[1].family);
    CHECK(c.entries[1].vars.size() == 3);
    CHECK(*c.entries[1].params.samples == std::vector<Rational>{R(0), R(1), R(1, 2)});

    auto bad = [](const char* text) { CHECK_THROWS_AS(parse_corpus(text), CorpusError); };
    bad("{");
    bad(R"({"entries": [{"name": "a", "poly": "x^2 +", "checks": ["teissier"]}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": ["teissier"], "colour": 1}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": ["nope"]}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": []}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": ["teissier", "teissier"]}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": ["teissier"]},
                        {"name": "a", "poly": "y^2", "checks": ["teissier"]}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2", "checks": ["mu_constant"]}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2+y^2", "checks": ["teissier"], "params": {"hyperplane": [0, 0]}}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2+y^2", "checks": ["teissier"], "params": {"d": -1}}]})");
    bad(R"({"entries": [{"name": "a", "poly": "x^2+y^2", "checks": ["expect"]}]})");
}

TEST_CASE("reports are deterministic and ordered") {
    const char* text = R"({"name": "det", "entries": [
        {"name": "e8", "poly": "x^2+y^3+z^5", "checks": ["teissier", "corollary_chain", "milnor_chain"]},
        {"name": "a2", "poly": "x^2+y^3", "checks": ["teissier", "upper_bound"]},
        {"name": "d4", "poly": "x^2*y+y^3+z^2", "checks": ["teissier", "milnor_chain"]}]})";
    Corpus c = parse_corpus(text);
    RunOptions one;
    one.seed = 5;
    RunOptions many = one;
    many.jobs = 4;
    Report a = run_corpus(c, one);
    Report b = run_corpus(c, many);
    CHECK(to_json(a, false) == to_json(b, false));
    CHECK(to_json(a, false) == to_json(run_corpus(c, one), false));
    REQUIRE(a.entries.size() == 3);
    CHECK(a.entries[0].name == "e8");
    CHECK(a.entries[2].name == "d4");
    CHECK(a.entries[1].seed == entry_seed(5, "a2"));
    CHECK(a.summary.fail == 0);
    CHECK(exit_code(a, false) == 0);

    RunOptions other = one;
    other.seed = 6;
    CHECK(run_corpus(c, other).entries[0].seed != a.entries[0].seed);

    RunOptions filtered = one;
    filtered.only = {CheckKind::teissier};
    Report f = run_corpus(c, filtered);
    for (const auto& e : f.entries) CHECK(e.checks.size() == 1);
}

TEST_CASE("exit codes") {
    Report r;
    CHECK(exit_code(r, true) == 0);
    r.summary.inconclusive = 1;
    CHECK(exit_code(r, false) == 0);
    CHECK(exit_code(r, true) == 3);
    r.summary.fail = 1;
    CHECK(exit_code(r, true) == 1);
}

TEST_CASE("command line") {
    auto empty = temp_file("empty.corpus", "{\"entries\": []}");
    auto broken = temp_file("broken.corpus", R"({"entries": [{"name": "a", "poly": "x^2 + $", "checks": ["teissier"]}]})");
    auto wrong = temp_file("wrong.corpus",
                           R"({"entries": [{"name": "a", "poly": "x^2+y^3", "checks": ["expect"], "params": {"expect": {"mu": 3}}}]})");
    auto unsure = temp_file("unsure.corpus",
                            R"({"entries": [{"name": "a", "poly": "x^2+y^3", "checks": ["lct_relation"]}]})");
    CHECK(run_cli("verify " + empty.string()) == 0);
    CHECK(run_cli("verify " + broken.string()) == 2);
    CHECK(run_cli("verify " + wrong.string()) == 1);
    CHECK(run_cli("verify " + unsure.string()) == 0);
    CHECK(run_cli("verify --strict " + unsure.string()) == 3);
    CHECK(run_cli("verify /nonexistent/file.corpus") == 2);
    CHECK(run_cli("milnor \"x^2+y^3\"") == 0);
    CHECK(run_cli("milnor \"x^2+\"") == 2);
    CHECK(run_cli("--format json theta \"x^2+y^3\"") == 0);
    CHECK(run_cli("frobnicate") == 2);

    auto out = std::filesystem::temp_directory_path() / "hypersing_test_report.json";
    REQUIRE(run_cli("--seed 3 verify --no-timing --output " + out.string() + " " + wrong.string()) == 1);
    std::ifstream in(out);
    std::string json((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(json.find("\"verdict\": \"FAIL\"") != std::string::npos);
    CHECK(json.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("the documented example corpus runs clean") {
    std::ifstream in(HYPERSING_DOCS_DIR "/corpus_format.md");
    std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto start = doc.find("```json\n");
    REQUIRE(start != std::string::npos);
    start += 8;
    auto end = doc.find("```", start);
    Report r = run_corpus(parse_corpus(doc.substr(start, end - start)), RunOptions{});
    CHECK(r.entries.size() == 4);
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.pass == 10);
}
