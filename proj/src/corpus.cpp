#include "hypersing/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hypersing {

using nlohmann::json;

std::string to_string(CheckKind k) {
    switch (k) {
        case CheckKind::teissier: return "teissier";
        case CheckKind::corollary_chain: return "corollary_chain";
        case CheckKind::upper_bound: return "upper_bound";
        case CheckKind::milnor_chain: return "milnor_chain";
        case CheckKind::lct_relation: return "lct_relation";
        case CheckKind::spectrum_family: return "spectrum_family";
        case CheckKind::mu_constant: return "mu_constant";
        case CheckKind::expect: return "expect";
    }
    return "unknown";
}

const std::vector<CheckKind>& all_check_kinds() {
    static const std::vector<CheckKind> kinds = {
        CheckKind::teissier,     CheckKind::corollary_chain, CheckKind::upper_bound,
        CheckKind::milnor_chain, CheckKind::lct_relation,    CheckKind::spectrum_family,
        CheckKind::mu_constant,  CheckKind::expect,
    };
    return kinds;
}

std::optional<CheckKind> parse_check_kind(std::string_view text) {
    for (auto k : all_check_kinds())
        if (to_string(k) == text) return k;
    return std::nullopt;
}

namespace {

bool is_family_check(CheckKind k) { return k == CheckKind::spectrum_family || k == CheckKind::mu_constant; }

void require_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
    if (!obj.is_object()) throw CorpusError(where + ": expected an object");
    for (const auto& [key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw CorpusError(where + ": unknown field \"" + key + "\"");
}

Rational rational_of(const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Rational(std::to_string(v.get<std::int64_t>()));
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
        throw CorpusError(where + ": " + e.what());
    }
    throw CorpusError(where + ": expected an integer or a \"p/q\" string");
}

std::vector<Rational> rationals_of(const json& v, const std::string& where) {
    if (!v.is_array()) throw CorpusError(where + ": expected an array");
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(rational_of(x, where));
    return out;
}

std::uint64_t natural_of(const json& v, const std::string& where) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw CorpusError(where + ": expected a natural number");
    return v.get<std::uint64_t>();
}

ExtNat extnat_of(const json& v, const std::string& where) {
    if (v.is_string() && v.get<std::string>() == "inf") return ExtNat::infinity();
    return natural_of(v, where);
}

ExtRat extrat_of(const json& v, const std::string& where) {
    if (v.is_string() && v.get<std::string>() == "inf") return ExtRat::infinity();
    return rational_of(v, where);
}

Expectations expectations_of(const json& v, const std::string& where) {
    require_keys(v, {"mu", "mult", "theta", "exponent", "spectrum"}, where);
    Expectations e;
    if (v.contains("mu")) e.mu = extnat_of(v["mu"], where + ".mu");
    if (v.contains("mult")) e.mult = extnat_of(v["mult"], where + ".mult");
    if (v.contains("theta")) e.theta = rational_of(v["theta"], where + ".theta");
    if (v.contains("exponent")) e.exponent = extrat_of(v["exponent"], where + ".exponent");
    if (v.contains("spectrum")) e.spectrum = rationals_of(v["spectrum"], where + ".spectrum");
    return e;
}

EntryParams params_of(const json& v, const std::string& where) {
    require_keys(v,
                 {"d", "m", "samples", "exclusions", "expect", "family", "param", "hyperplane", "nondegenerate"},
                 where);
    EntryParams p;
    if (v.contains("d")) p.d = natural_of(v["d"], where + ".d");
    if (v.contains("m")) p.m = natural_of(v["m"], where + ".m");
    if (v.contains("samples")) p.samples = rationals_of(v["samples"], where + ".samples");
    if (v.contains("exclusions")) p.exclusions = rationals_of(v["exclusions"], where + ".exclusions");
    if (v.contains("expect")) p.expect = expectations_of(v["expect"], where + ".expect");
    if (v.contains("family")) {
        const json& f = v["family"];
        std::string s = f.is_string() ? f.get<std::string>() : "";
        if (s == "parametric") p.family = FamilyKind::parametric;
        else if (s == "loeser") p.family = FamilyKind::loeser;
        else if (s == "cover") p.family = FamilyKind::cover;
        else throw CorpusError(where + ".family: expected \"parametric\", \"loeser\" or \"cover\"");
    }
    if (v.contains("param")) {
        if (!v["param"].is_string()) throw CorpusError(where + ".param: expected a string");
        p.param = v["param"].get<std::string>();
    }
    if (v.contains("hyperplane")) p.hyperplane = rationals_of(v["hyperplane"], where + ".hyperplane");
    if (v.contains("nondegenerate")) {
        if (!v["nondegenerate"].is_boolean()) throw CorpusError(where + ".nondegenerate: expected a boolean");
        p.nondegenerate = v["nondegenerate"].get<bool>();
    }
    return p;
}

}  // namespace

CorpusEntry make_entry(std::string name, const std::vector<std::string>& vars, std::string poly,
                       std::vector<CheckKind> checks, EntryParams params, std::optional<std::uint64_t> seed) {
    const std::string where = "entry \"" + name + "\"";
    if (name.empty()) throw CorpusError("entry with an empty name");
    if (checks.empty()) throw CorpusError(where + ": no checks requested");
    std::set<CheckKind> seen;
    for (auto k : checks)
        if (!seen.insert(k).second) throw CorpusError(where + ": check " + to_string(k) + " listed twice");

    if (params.param && !params.family) params.family = FamilyKind::parametric;
    if (params.family == FamilyKind::parametric && !params.param)
        throw CorpusError(where + ": a parametric family needs \"param\"");
    if (params.param && params.family != FamilyKind::parametric)
        throw CorpusError(where + ": \"param\" only applies to parametric families");

    CorpusEntry e;
    e.name = std::move(name);
    e.poly_text = std::move(poly);
    e.checks = std::move(checks);
    e.seed = seed;
    try {
        std::vector<std::string> names = vars;
        if (names.empty()) {
            for (auto& id : collect_identifiers(e.poly_text))
                if (!params.param || id != *params.param) names.push_back(id);
            std::sort(names.begin(), names.end());
            if (names.empty()) throw CorpusError(where + ": no variables");
        }
        e.vars = VarSet(names);
        if (params.family == FamilyKind::parametric) {
            e.family = Family::parametric(e.vars, *params.param, e.poly_text);
        } else {
            e.poly = parse_poly(e.poly_text, e.vars);
            if (params.family == FamilyKind::loeser) {
                std::uint64_t d = params.d ? *params.d : order_at_origin(e.poly).value();
                e.family = loeser_family(e.poly, d);
            } else if (params.family == FamilyKind::cover) {
                if (!params.d || !params.m) throw CorpusError(where + ": a cover family needs d and m");
                e.family = cover_family(e.poly, *params.d, *params.m);
            }
        }
    } catch (const CorpusError&) {
        throw;
    } catch (const Error& err) {
        throw CorpusError(where + ": " + err.what());
    }

    for (auto k : e.checks) {
        if (e.family && !is_family_check(k))
            throw CorpusError(where + ": check " + to_string(k) + " does not apply to a family");
        if (!e.family && is_family_check(k))
            throw CorpusError(where + ": check " + to_string(k) + " needs a family");
    }
    if (!e.family && params.samples) throw CorpusError(where + ": samples only apply to families");
    if (std::find(e.checks.begin(), e.checks.end(), CheckKind::expect) != e.checks.end() &&
        params.expect.empty())
        throw CorpusError(where + ": check expect needs params.expect");
    if (params.hyperplane) {
        if (params.hyperplane->size() != e.vars.size())
            throw CorpusError(where + ": hyperplane needs one coefficient per variable");
        if (std::all_of(params.hyperplane->begin(), params.hyperplane->end(),
                        [](const Rational& a) { return sgn(a) == 0; }))
            throw CorpusError(where + ": hyperplane coefficients are all zero");
    }
    e.params = std::move(params);
    return e;
}

Corpus parse_corpus(std::string_view text) {
    Corpus c;
    c.digest = fnv1a64(text);
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return c;  // empty file: no entries
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw CorpusError(std::string("corpus is not valid JSON: ") + err.what());
    }
    require_keys(doc, {"name", "entries"}, "corpus");
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw CorpusError("corpus.name: expected a string");
        c.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw CorpusError("corpus: missing entries array");
    std::set<std::string> names;
    std::size_t index = 0;
    for (const auto& item : doc["entries"]) {
        const std::string where = "entries[" + std::to_string(index++) + "]";
        require_keys(item, {"name", "vars", "poly", "checks", "params", "seed"}, where);
        if (!item.contains("name") || !item["name"].is_string()) throw CorpusError(where + ": missing name");
        std::string name = item["name"].get<std::string>();
        if (!names.insert(name).second) throw CorpusError(where + ": duplicate name \"" + name + "\"");
        if (!item.contains("poly") || !item["poly"].is_string()) throw CorpusError(where + ": missing poly");
        std::vector<std::string> vars;
        if (item.contains("vars")) {
            if (!item["vars"].is_array()) throw CorpusError(where + ".vars: expected an array of names");
            for (const auto& v : item["vars"]) {
                if (!v.is_string()) throw CorpusError(where + ".vars: expected an array of names");
                vars.push_back(v.get<std::string>());
            }
        }
        if (!item.contains("checks") || !item["checks"].is_array()) throw CorpusError(where + ": missing checks");
        std::vector<CheckKind> checks;
        for (const auto& ck : item["checks"]) {
            auto k = ck.is_string() ? parse_check_kind(ck.get<std::string>()) : std::nullopt;
            if (!k) throw CorpusError(where + ".checks: unknown check " + ck.dump());
            checks.push_back(*k);
        }
        EntryParams params;
        if (item.contains("params")) params = params_of(item["params"], where + ".params");
        std::optional<std::uint64_t> seed;
        if (item.contains("seed")) seed = natural_of(item["seed"], where + ".seed");
        c.entries.push_back(make_entry(std::move(name), vars, item["poly"].get<std::string>(), std::move(checks),
                                       std::move(params), seed));
    }
    return c;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorpusError("cannot read corpus file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

}  // namespace hypersing
