#include "hypersing/sections.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace hypersing {

Hyperplane::Hyperplane(std::vector<Rational> coefficients) : a_(std::move(coefficients)) {
    bool found = false;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (sgn(a_[i]) != 0) {
            pivot_ = i;
            found = true;
        }
    }
    if (!found) throw DomainError("hyperplane needs a nonzero coefficient");
}

Hyperplane Hyperplane::random(std::size_t n, Sampler& sampler) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n; ++i) a.emplace_back(sampler.next_coefficient());
    return Hyperplane(std::move(a));
}

Hyperplane Hyperplane::coordinate(std::size_t n, std::size_t i) {
    std::vector<Rational> a(n, Rational(0));
    a.at(i) = 1;
    return Hyperplane(std::move(a));
}

std::string to_string(const Hyperplane& h) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < h.arity(); ++i) out << (i ? ", " : "") << to_string(h.coefficients()[i]);
    out << ')';
    return out.str();
}

Poly restrict(const Poly& f, const Hyperplane& h, std::size_t term_cap) {
    if (f.is_zero()) throw DomainError("cannot restrict the zero polynomial");
    if (h.arity() != f.arity()) throw DomainError("hyperplane and polynomial have different arity");
    if (f.arity() < 2) throw DomainError("restriction needs at least two variables");
    const std::size_t p = h.pivot();
    VarSet target = f.vars().without(p);
    Poly repl(target);
    const Rational& ap = h.coefficients()[p];
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i == p || sgn(h.coefficients()[i]) == 0) continue;
        Rational c = -h.coefficients()[i] / ap;
        repl += Poly::variable(target, *target.index_of(f.vars().name(i))) * c;
    }
    Poly g = substitute(f, {{p, repl}}, target, term_cap);
    if (g.is_zero()) throw DomainError("f vanishes identically on the hyperplane");
    return g;
}

Poly adapt_to_hyperplane(const Poly& f, const Hyperplane& h, std::size_t term_cap) {
    if (h.arity() != f.arity()) throw DomainError("hyperplane and polynomial have different arity");
    const std::size_t p = h.pivot();
    const Rational& ap = h.coefficients()[p];
    Poly repl = Poly::variable(f.vars(), p) * Rational(1 / ap);
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i == p || sgn(h.coefficients()[i]) == 0) continue;
        repl -= Poly::variable(f.vars(), i) * Rational(h.coefficients()[i] / ap);
    }
    return substitute(f, {{p, repl}}, f.vars(), term_cap);
}

std::string to_string(SectionInvariant inv) {
    switch (inv) {
        case SectionInvariant::mu: return "mu";
        case SectionInvariant::mult: return "mult";
        case SectionInvariant::exponent: return "exponent";
        case SectionInvariant::theta: return "theta";
    }
    return "unknown";
}

std::optional<SectionInvariant> parse_section_invariant(std::string_view text) {
    for (auto inv : {SectionInvariant::mu, SectionInvariant::mult, SectionInvariant::exponent,
                     SectionInvariant::theta})
        if (to_string(inv) == text) return inv;
    return std::nullopt;
}

namespace {

ExtRat to_ext(const ExtNat& v) {
    return v.is_infinite() ? ExtRat::infinity() : ExtRat(Rational(static_cast<unsigned long>(v.value())));
}

}  // namespace

InvariantValue evaluate_invariant(const Poly& f, SectionInvariant inv, const Limits& limits) {
    switch (inv) {
        case SectionInvariant::mu: return {to_ext(milnor_number(f, limits)), true};
        case SectionInvariant::mult: return {to_ext(multiplicity(f)), true};
        case SectionInvariant::exponent: {
            MinExp e = minimal_exponent(f, limits);
            return {e.value, e.exact};
        }
        case SectionInvariant::theta: {
            ThetaVal t = theta(f, limits);
            return {ExtRat(t.value), is_exact(t.status)};
        }
    }
    throw Error("unknown section invariant");
}

Poly random_section(const Poly& f, Sampler& sampler, Hyperplane* chosen) {
    constexpr int kAttempts = 8;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Hyperplane h = Hyperplane::random(f.arity(), sampler);
        try {
            Poly g = restrict(f, h);
            if (chosen) *chosen = h;
            return g;
        } catch (const DomainError&) {
            if (f.is_zero() || f.arity() < 2) throw;
        }
    }
    throw DomainError("degenerate sampling: restriction vanished on every sampled hyperplane");
}

SectionResult generic_section(const Poly& f, SectionInvariant inv, const Sampler& sampler,
                              const Limits& limits) {
    if (f.arity() < 2) throw DomainError("generic section needs n >= 2");
    SectionResult out;
    std::vector<Hyperplane> last;
    std::function<InvariantValue(Sampler)> run = [&](Sampler s) {
        Hyperplane h = Hyperplane::coordinate(f.arity(), 0);
        Poly g = random_section(f, s, &h);
        if (last.size() == 2) last.clear();
        last.push_back(h);
        return evaluate_invariant(g, inv, limits);
    };
    out.stable = two_seed_stable(sampler, run);
    out.hyperplanes = last;
    return out;
}

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::parametric: return "parametric";
        case FamilyKind::loeser: return "loeser";
        case FamilyKind::cover: return "cover";
    }
    return "unknown";
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
    auto free = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) == taken.end(); };
    if (free(base)) return base;
    for (int k = 1;; ++k)
        if (std::string s = base + std::to_string(k); free(s)) return s;
}

Poly Family::instantiate(const std::vector<Rational>& values) const {
    if (values.size() != params_.size()) throw DomainError("wrong number of family parameter values");
    std::map<std::size_t, Poly> assign;
    for (std::size_t k = 0; k < values.size(); ++k)
        assign.emplace(vars_.size() + k, Poly::constant(vars_, values[k]));
    return substitute(symbolic_, assign, vars_);
}

Family Family::parametric(const VarSet& vars, const std::string& param, std::string_view text) {
    std::vector<std::string> names = vars.names();
    if (std::find(names.begin(), names.end(), param) != names.end())
        throw DomainError("parameter name clashes with a variable: " + param);
    names.push_back(param);
    Family fam;
    fam.kind_ = FamilyKind::parametric;
    fam.vars_ = vars;
    fam.params_ = {param};
    fam.symbolic_ = parse_poly(text, VarSet(names));
    return fam;
}

Family loeser_family(const Poly& f, std::uint64_t d) {
    const std::size_t n = f.arity();
    if (n < 2) throw DomainError("Loeser family needs n >= 2");
    if (d < 2) throw DomainError("Loeser family needs d >= 2");
    std::vector<std::string> names = f.vars().names();
    const std::string t = fresh_name(names, "t");
    names.push_back(t);
    VarSet big(names);
    Poly xn = Poly::variable(big, n - 1);
    Poly tp = Poly::variable(big, n);
    Poly h = substitute(f, {{n - 1, tp * xn}}, big);
    h += (Poly::constant(big, 1) - tp) * power(xn, static_cast<std::uint32_t>(d));
    Family fam;
    fam.kind_ = FamilyKind::loeser;
    fam.vars_ = f.vars();
    fam.params_ = {t};
    fam.symbolic_ = std::move(h);
    return fam;
}

Family cover_family(const Poly& f, std::uint64_t d, std::uint64_t m) {
    const std::size_t n = f.arity();
    if (d < 1 || m < d) throw DomainError("cover family needs m >= d >= 1");
    std::vector<std::string> names = f.vars().names();
    const std::string y = fresh_name(names, "y");
    names.push_back(y);
    const std::string z = fresh_name(names, "z");
    names.push_back(z);
    VarSet big(names);
    Poly xn = Poly::variable(big, n - 1);
    Poly h = substitute(f, {{n - 1, Poly::variable(big, n) * power(xn, static_cast<std::uint32_t>(d))}}, big);
    h += Poly::variable(big, n + 1) * power(xn, static_cast<std::uint32_t>(m));

    std::vector<Rational> wt(n + 2, Rational(0));
    wt[n - 1] = 1;
    wt[n] = -Rational(static_cast<unsigned long>(d));
    wt[n + 1] = -Rational(static_cast<unsigned long>(m));
    WeightedDegree wd = weighted_degree(h, wt);
    if (!wd.homogeneous || wd.degree != ExtRat(Rational(0)))
        throw Error("internal: cover family is not homogeneous of weight 0");

    Family fam;
    fam.kind_ = FamilyKind::cover;
    fam.vars_ = f.vars();
    fam.params_ = {y, z};
    fam.symbolic_ = std::move(h);
    return fam;
}

std::vector<Rational> default_samples() {
    return {Rational(-3), Rational(-2), Rational(-1, 2), Rational(-1, 3),
            Rational(1, 3), Rational(1, 2), Rational(2), Rational(3)};
}

ScanResult mu_scan(const Family& family, std::vector<Rational> samples,
                   const std::vector<Rational>& exclusions, const Limits& limits, unsigned jobs) {
    std::erase_if(samples, [&](const Rational& t) {
        return std::find(exclusions.begin(), exclusions.end(), t) != exclusions.end();
    });
    ScanResult out;
    out.points.resize(samples.size());
    auto one = [&](std::size_t i) {
        ScanPoint& p = out.points[i];
        p.t = samples[i];
        try {
            Poly h = family.kind() == FamilyKind::cover ? family.instantiate({Rational(1), samples[i]})
                                                        : family.instantiate(samples[i]);
            p.mu = milnor_number(h, limits);
        } catch (const Error& e) {
            p.error = e.what();
        }
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < samples.size();) one(i);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(samples.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::map<ExtNat, std::vector<std::size_t>> groups;
    bool all = true;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        if (out.points[i].mu) groups[*out.points[i].mu].push_back(i);
        else all = false;
    }
    out.partition.assign(groups.begin(), groups.end());
    out.constant = all && groups.size() == 1;
    return out;
}

}  // namespace hypersing
